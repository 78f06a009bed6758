""" 피적분함수 수준(구적법 없음)의 점별 항등식 검사 """
import cmath
import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..exceptions import GammaPoleError, PoleAtS, SpecError, SpecValidationFailed
from ..gammakit import LogComplex, log_gamma_values
from ..hspec import Argument, ConvergenceProfile, contour_window, convergence_profile
from ..mellin import integrand, theta
from .base import IdentityCase, IdentityParams
from .builders import main_lhs_spec

__all__ = (
    "KernelResidual",
    "integrand_terms",
    "integrand_check",
    "integrand_residual",
    "kernel_residual",
    "kernel_grid",
    "kernel_checks",
    "KERNEL_IM_SPAN",
)

KERNEL_IM_SPAN: float = 10.0


@dataclass(frozen=True)
class KernelResidual:
    """ 공통 척도 e^{log_scale} 로 나눈 양변 값 """

    s: complex
    log_scale: float
    lhs: complex
    rhs: complex

    @property
    def residual(self) -> complex:
        return (self.lhs - self.rhs) * math.exp(self.log_scale)

    @property
    def relative(self) -> float:
        top = max(abs(self.lhs), abs(self.rhs))
        if top == 0:
            return 0.0
        return abs(self.lhs - self.rhs) / top


def _shared_scale(s: complex, lhs: Sequence[LogComplex], rhs: Sequence[LogComplex]) -> KernelResidual:
    logs = [x.log_modulus for x in list(lhs) + list(rhs) if not x.is_zero]
    scale = max(logs) if logs else 0.0

    def total(values: Sequence[LogComplex]) -> complex:
        return sum((x.scale(complex(-scale)).to_complex() for x in values), 0j)

    return KernelResidual(complex(s), scale, total(lhs), total(rhs))


def _exponential_sum(params: IdentityParams, s: complex) -> LogComplex:
    """ e^{iπ(α+β-(λ+δ)s)} + e^{iπ(α-β-(λ-δ)s)} - e^{-iπ(α-β-(λ-δ)s)} - e^{-iπ(α+β-(λ+δ)s)} """
    a, b, lam, delta = params.alpha, params.beta, params.lam, params.delta
    plus = 1j * math.pi * (a + b - (lam + delta) * s)
    minus = 1j * math.pi * (a - b - (lam - delta) * s)
    logs = np.array([plus, minus, -minus, -plus])
    signs = np.array([1, 1, -1, -1])
    top = float(np.max(logs.real))
    scaled = complex(np.sum(signs * np.exp(logs - top)))
    if scaled == 0:
        return LogComplex.zero()
    return LogComplex.from_complex(scaled).scale(complex(top))


def integrand_terms(
    params: IdentityParams, z: Argument, s: complex
) -> Tuple[LogComplex, LogComplex]:
    """ (A, B)

    A = 2πi · θ_lhs(s) · z^s  (MAIN 좌변 명세)
    B = θ_base(s) · z^s · Γ(2β-2δs) Γ(1-2β+2δs) · (네 지수항의 합)
    PoleAtS: s 에서 관련 감마가 극점
    """
    s = complex(s)
    try:
        lhs_spec = main_lhs_spec(params)
    except SpecError as e:
        raise SpecValidationFailed(f"MAIN 좌변 명세가 검증을 통과하지 못했습니다. -> {e}") from e

    b, delta = params.beta, params.delta
    try:
        a = integrand(lhs_spec, z, s).scale(cmath.log(2j * math.pi))
        gammas = log_gamma_values(np.array([2 * b - 2 * delta * s, 1 - 2 * b + 2 * delta * s]))
        kernel = theta(params.base, s).scale(s * z.log() + complex(np.sum(gammas)))
    except GammaPoleError as e:
        raise PoleAtS(f"s 가 감마 극점입니다. -> s={s}") from e
    return a, kernel * _exponential_sum(params, s)


def integrand_check(params: IdentityParams, z: Argument, s: complex) -> KernelResidual:
    a, b = integrand_terms(params, z, s)
    return _shared_scale(s, [a], [b])


def integrand_residual(params: IdentityParams, z: Argument, s: complex) -> complex:
    """ A - B (공통 척도로 계산 후 복원) """
    return integrand_check(params, z, s).residual


def kernel_residual(case: IdentityCase, z: Argument, s: complex) -> KernelResidual:
    """ Σ_lhs prefactor·θ(s)·(z e^{iσ})^s 와 Σ_rhs 의 비교

    PoleAtS: s 가 어떤 항의 분자 감마 극점
    """
    s = complex(s)

    def side(terms) -> List[LogComplex]:
        return [
            integrand(x.spec, x.argument(z), s) * LogComplex.from_complex(x.prefactor)
            for x in terms
        ]

    try:
        lhs, rhs = side(case.lhs), side(case.rhs)
    except GammaPoleError as e:
        raise PoleAtS(f"s 가 감마 극점입니다. -> s={s}") from e
    return _shared_scale(s, lhs, rhs)


def kernel_grid(case: IdentityCase, rows: int = 5, cols: int = 5) -> List[complex]:
    """ 모든 항의 공통 띠의 가운데 1/3 × Im s ∈ [-10, 10] 격자 """
    profiles = [convergence_profile(x.spec) for _, _, x in case.terms]
    lo = max(x.c_min for x in profiles)
    hi = min(x.c_max for x in profiles)
    if not lo < hi:
        raise SpecValidationFailed(f"공통 띠가 비어 있습니다. -> ({lo}, {hi})")
    lo, hi = contour_window(ConvergenceProfile(0.0, lo, hi, 0.0))
    third = (hi - lo) / 3
    re = np.linspace(lo + third, hi - third, rows)
    im = np.linspace(-KERNEL_IM_SPAN, KERNEL_IM_SPAN, cols)
    return [complex(x, y) for x in re for y in im]


def kernel_checks(
    case: IdentityCase, z: Argument, grid: Iterable[complex]
) -> List[KernelResidual]:
    return [kernel_residual(case, z, s) for s in grid]
