""" 오라클 비교용 단순극점 명세 목록 """
from typing import Dict

from ..hspec import HFunctionSpec, validate

__all__ = ("ORACLE_CATALOG", "ORACLE_MODULI", "ORACLE_PHASES", "CLOSED_FORM_MODULI")

ORACLE_MODULI = (0.3, 0.5, 0.8)
ORACLE_PHASES = (0.0, 0.2, -0.2)
CLOSED_FORM_MODULI = (0.5, 1.0, 2.0)


def _spec(m, n, upper, lower) -> HFunctionSpec:
    return validate(HFunctionSpec.build(m, n, upper, lower))


ORACLE_CATALOG: Dict[str, HFunctionSpec] = {
    "H10_01_exp": _spec(1, 0, [], [(0, 1)]),
    "H10_01_shifted": _spec(1, 0, [], [(0.5, 1)]),
    "H10_01_weight2": _spec(1, 0, [], [(0.25, 2)]),
    "H11_11_geometric": _spec(1, 1, [(0, 1)], [(0, 1)]),
    "H11_11_binomial": _spec(1, 1, [(0.3, 1)], [(0.5, 1)]),
    "H20_02_bessel": _spec(2, 0, [], [(0, 1), (0.5, 1)]),
    "H21_12_unit": _spec(2, 1, [(0.2, 1)], [(0, 1), (0.5, 1)]),
    "H21_12_weighted": _spec(2, 1, [(0.5, 0.5)], [(0.1, 1), (0.3, 0.7)]),
    "H22_22_unit": _spec(2, 2, [(0, 1), (0.5, 1)], [(0.25, 1), (0.75, 1)]),
    "H22_22_weighted": _spec(2, 2, [(0.1, 0.5), (0.4, 1)], [(0.2, 1), (0.7, 0.5)]),
}
