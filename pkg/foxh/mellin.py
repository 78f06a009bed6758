""" Mellin-Barnes 핵 θ(s) 와 피적분함수 θ(s)·z^s (로그 공간) """
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike

from .exceptions import PoleOfNumerator
from .gammakit import LogComplex, log_gamma_values, pole_mask
from .hspec import Argument, HFunctionSpec, validate

__all__ = (
    "KernelPoint",
    "log_theta",
    "log_integrand",
    "theta",
    "integrand",
    "sample",
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelPoint:
    s: complex
    value: LogComplex


def _gamma_arguments(
    spec: HFunctionSpec, s: np.ndarray, omit_lower: Optional[int] = None
) -> Tuple[List[np.ndarray], List[np.ndarray]]:
    numerators = [
        x.coeff - x.weight * s
        for j, x in enumerate(spec.lower[: spec.m])
        if j != omit_lower
    ]
    numerators += [1 - x.coeff + x.weight * s for x in spec.upper[: spec.n]]
    denominators = [1 - x.coeff + x.weight * s for x in spec.lower[spec.m :]]
    denominators += [x.coeff - x.weight * s for x in spec.upper[spec.n :]]
    return numerators, denominators


def log_theta(
    spec: HFunctionSpec, s: ArrayLike, omit_lower: Optional[int] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """ θ(s) 의 로그값과 영(0) 마스크

    분모 감마의 극점은 θ(s) = 0 이 되며 마스크로 표시한다 (해당 원소의 로그값은 0).
    omit_lower=j 이면 분자 인자 Γ(b_j - f_j s) 를 뺀 θ_j(s) (잔류 계산용).
    PoleOfNumerator: s 가 분자 감마의 극점
    """
    spec = validate(spec)
    s = np.asarray(s, dtype=np.complex128)
    numerators, denominators = _gamma_arguments(spec, s, omit_lower)

    total = np.zeros(s.shape, dtype=np.complex128)
    for arg in numerators:
        poles = pole_mask(arg)
        if np.any(poles):
            raise PoleOfNumerator(
                f"s 가 분자 감마의 극점입니다. -> s={complex(s[poles].flat[0])}"
            )
        total += log_gamma_values(arg)

    zero = np.zeros(s.shape, dtype=bool)
    for arg in denominators:
        poles = pole_mask(arg)
        zero |= poles
        total -= log_gamma_values(np.where(poles, 1.0, arg))
    total[zero] = 0.0
    return total, zero


def log_integrand(
    spec: HFunctionSpec, z: Argument, s: ArrayLike
) -> Tuple[np.ndarray, np.ndarray]:
    """ log θ(s) + s·(ln|z| + i·arg z); 위상은 환원하지 않는다 """
    s = np.asarray(s, dtype=np.complex128)
    total, zero = log_theta(spec, s)
    total = total + s * z.log()
    total[zero] = 0.0
    return total, zero


def _as_log_complex(value: np.ndarray, zero: np.ndarray) -> LogComplex:
    if bool(zero):
        return LogComplex.zero()
    return LogComplex.from_log(complex(value))


def theta(spec: HFunctionSpec, s: complex) -> LogComplex:
    return _as_log_complex(*log_theta(spec, complex(s)))


def integrand(spec: HFunctionSpec, z: Argument, s: complex) -> LogComplex:
    return _as_log_complex(*log_integrand(spec, z, complex(s)))


def sample(
    spec: HFunctionSpec, z: Argument, s_values: Iterable[complex]
) -> List[KernelPoint]:
    s = np.fromiter((complex(x) for x in s_values), dtype=np.complex128)
    values, zero = log_integrand(spec, z, s)
    return [
        KernelPoint(complex(point), _as_log_complex(value, flag))
        for point, value, flag in zip(s, values, zero)
    ]
