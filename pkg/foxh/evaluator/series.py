""" 오른쪽 극점 잔류 급수 (독립 오라클)

value = Σ_j Σ_k (-1)^k / (k!·f_j) · θ_j(s_jk) · z^{s_jk},  s_jk = (b_j + k) / f_j
"""
import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy import special

from ..exceptions import LogarithmicCase, PoleOfNumerator, SeriesDiverged
from ..hspec import Argument, HFunctionSpec
from ..mellin import log_theta
from .base import BaseEvaluator, EvalResult, Method, Precondition, QuadratureOptions

__all__ = ("SeriesEvaluator", "SERIES_MAX_TERMS")

logger = logging.getLogger(__name__)

SERIES_MAX_TERMS: int = 2000
SMALL_RUN: int = 3
ROUNDOFF: float = 1e-16


def _family_logs(
    spec: HFunctionSpec, z: Argument, j: int, count: int
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """ j 번째 분자 감마 Γ(b_j - f_j s) 의 극점에서의 (s, 로그 잔류항, 영 마스크) """
    pair = spec.lower[j]
    k = np.arange(count)
    s = (pair.coeff + k) / pair.weight
    logs, zero = log_theta(spec, s, omit_lower=j)
    logs = logs + 1j * np.pi * k - special.gammaln(k + 1) - math.log(pair.weight)
    logs = logs + s * z.log()
    return s, logs, zero


def _residue_terms(spec: HFunctionSpec, z: Argument, count: int) -> np.ndarray:
    """ 모든 극점족의 잔류항을 실수부 순서로 합쳐 앞에서 count 개 """
    poles, logs, zeros = [], [], []
    for j in range(spec.m):
        try:
            s, family, zero = _family_logs(spec, z, j, count)
        except PoleOfNumerator as e:
            raise LogarithmicCase(f"먼 오른쪽 극점이 겹칩니다. -> {e}", spec, z) from e
        poles.append(s)
        logs.append(family)
        zeros.append(zero)

    poles = np.concatenate(poles)
    order = np.argsort(poles.real, kind="stable")[:count]
    logs = np.concatenate(logs)[order]
    zeros = np.concatenate(zeros)[order]
    with np.errstate(over="ignore", invalid="ignore"):
        terms = np.where(zeros, 0.0, np.exp(logs))
    return terms


class SeriesEvaluator(BaseEvaluator):
    METHOD = Method.SERIES

    @classmethod
    @Precondition(Method.SERIES)
    def evaluate(
        cls,
        spec: HFunctionSpec,
        z: Argument,
        opts: Optional[QuadratureOptions] = None,
        max_terms: int = SERIES_MAX_TERMS,
    ) -> EvalResult:
        """ 연속한 세 항이 rel_tol·|부분합| 이하가 되면 절단

        LogarithmicCase: 오른쪽 극점이 겹침 (사전조건)
        SeriesDiverged: 항이 넘치거나 max_terms 안에서 절단 조건에 도달하지 못함
        """
        opts = opts or QuadratureOptions()
        terms = _residue_terms(spec, z, max_terms)
        if not np.all(np.isfinite(terms)):
            raise SeriesDiverged(f"잔류항이 유한하지 않습니다. -> |z|={z.modulus}", spec, z)

        partial = np.cumsum(terms)
        small = (np.abs(terms) <= opts.rel_tol * np.abs(partial)) & (partial != 0)
        runs = np.convolve(small.astype(int), np.ones(SMALL_RUN, dtype=int), "valid")
        hits = np.flatnonzero(runs == SMALL_RUN)
        if hits.size == 0:
            raise SeriesDiverged(
                f"항 예산 안에서 급수가 수렴하지 않습니다. -> terms={terms.size}, |z|={z.modulus}",
                spec,
                z,
            )

        stop = int(hits[0]) + SMALL_RUN
        value = complex(partial[stop - 1])
        error = float(
            np.sum(np.abs(terms[stop - SMALL_RUN : stop]))
            + ROUNDOFF * np.sum(np.abs(terms[:stop]))
        )
        logger.debug("series terms=%d value=%r error=%.3e", stop, value, error)
        return EvalResult(value=value, error_estimate=error, method=Method.SERIES, nodes_used=stop)
