""" 수직 경로 Gauss-Legendre 구적법 (주 경로)

value = (1/2πi) ∫_{c-iT}^{c+iT} θ(s) z^s ds = (1/2π) ∫_{-T}^{T} θ(c+it) z^{c+it} dt
"""
import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..exceptions import BudgetExceeded
from ..hspec import (
    Argument,
    ConvergenceProfile,
    HFunctionSpec,
    contour_window,
    convergence_profile,
)
from ..mellin import log_integrand
from .base import (
    BaseEvaluator,
    ContourSpec,
    EvalResult,
    Method,
    Precondition,
    QuadratureOptions,
)

__all__ = (
    "ContourEvaluator",
    "default_abscissa",
    "envelope_truncation",
    "NODES_PER_PANEL",
)

logger = logging.getLogger(__name__)

NODES_PER_PANEL: int = 32
MAX_LEVELS: int = 16
MAX_TRUNCATION: float = 1e5
MAX_PANEL_WIDTH: float = 2.0
CANCELLATION_FLOOR: float = 1e-6

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(NODES_PER_PANEL)


def default_abscissa(profile: ConvergenceProfile) -> float:
    lo, hi = contour_window(profile)
    return 0.5 * (lo + hi)


def envelope_truncation(
    kappa: float, rho: float, rel_tol: float, tail_safety: float
) -> float:
    """ exp(-κT + ρ ln T) = rel_tol / tail_safety 의 해 (이분법, T >= 1) """
    target = math.log(rel_tol / tail_safety)

    def excess(t: float) -> float:
        return -kappa * t + rho * math.log(t) - target

    lo, hi = 1.0, 2.0
    if excess(lo) <= 0:
        return lo
    while excess(hi) > 0:
        lo, hi = hi, hi * 2
        if hi >= MAX_TRUNCATION:
            return MAX_TRUNCATION
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0:
            lo = mid
        else:
            hi = mid
    return hi


def _log_abs(spec: HFunctionSpec, z: Argument, c: float, t: np.ndarray) -> np.ndarray:
    logs, zero = log_integrand(spec, z, c + 1j * t)
    return np.where(zero, -np.inf, logs.real)


def _confirm_truncation(
    spec: HFunctionSpec, z: Argument, c: float, truncation: float, target: float
) -> Tuple[float, float]:
    """ ±T 의 크기가 봉우리 대비 target 아래가 될 때까지 T 를 늘림

    (T, ±T 에서의 log|f| 최댓값) 을 반환
    """
    while True:
        grid = np.concatenate([np.linspace(-truncation, truncation, 401), [0.0]])
        peak = float(np.max(_log_abs(spec, z, c, grid)))
        edge = float(np.max(_log_abs(spec, z, c, np.array([-truncation, truncation]))))
        if edge - peak <= target or truncation >= MAX_TRUNCATION:
            return truncation, edge
        truncation = min(truncation * 1.5, MAX_TRUNCATION)


def _breakpoints(truncation: float, gap: float, width: float) -> np.ndarray:
    """ t=0 근처는 gap/2 부터 두 배씩, 그 뒤는 폭 width 의 균일 패널 """
    inner = []
    x = 0.5 * gap
    while x < width and x < truncation:
        inner.append(x)
        x *= 2
    start = inner[-1] if inner else 0.0
    count = max(1, math.ceil((truncation - start) / width))
    outer = np.linspace(start, truncation, count + 1)[1:]
    positive = np.concatenate([np.asarray(inner, dtype=float), outer])
    return np.concatenate([-positive[::-1], [0.0], positive])


def _split(breakpoints: np.ndarray) -> np.ndarray:
    out = np.empty(2 * breakpoints.size - 1)
    out[0::2] = breakpoints
    out[1::2] = 0.5 * (breakpoints[:-1] + breakpoints[1:])
    return out


def _panel_sum(
    spec: HFunctionSpec, z: Argument, c: float, breakpoints: np.ndarray
) -> Tuple[complex, float]:
    """ 패널별 최대 log|f| 로 재조정하여 합산한 (적분값, L1 질량) """
    half = 0.5 * np.diff(breakpoints)
    mid = 0.5 * (breakpoints[:-1] + breakpoints[1:])
    t = mid[:, None] + half[:, None] * _NODES[None, :]
    w = half[:, None] * _WEIGHTS[None, :]

    logs, zero = log_integrand(spec, z, c + 1j * t)
    panel_max = np.max(np.where(zero, -np.inf, logs.real), axis=1)
    finite = np.isfinite(panel_max)
    if not np.any(finite):
        return 0j, 0.0
    shift = np.where(finite, panel_max, 0.0)
    terms = np.where(zero, 0.0, w * np.exp(logs - shift[:, None]))

    top = float(np.max(panel_max[finite]))
    rescale = np.where(finite, np.exp(shift - top), 0.0)
    partial = np.sum(terms, axis=1) * rescale
    mass = np.sum(np.abs(terms), axis=1) * rescale
    factor = math.exp(top) / (2 * math.pi)
    return complex(np.sum(partial)) * factor, float(np.sum(mass)) * factor


class ContourEvaluator(BaseEvaluator):
    METHOD = Method.CONTOUR

    @classmethod
    def plan(
        cls,
        spec: HFunctionSpec,
        z: Argument,
        opts: QuadratureOptions,
        abscissa: Optional[float] = None,
    ) -> Tuple[ContourSpec, np.ndarray, float]:
        """ 가로좌표, 절단 길이, 초기 패널 경계, 꼬리 log|f| 결정 """
        profile = convergence_profile(spec)
        c = default_abscissa(profile) if abscissa is None else float(abscissa)
        if not profile.c_min < c < profile.c_max:
            raise ValueError(
                f"가로좌표가 띠 밖에 있습니다. -> c={c}, ({profile.c_min}, {profile.c_max})"
            )

        kappa = profile.sector_halfwidth - abs(z.phase)
        rho = sum(x.weight for x in spec.upper + spec.lower)
        truncation = envelope_truncation(kappa, rho, opts.rel_tol, opts.tail_safety)
        target = math.log(opts.rel_tol / opts.tail_safety)
        truncation, edge = _confirm_truncation(spec, z, c, truncation, target)

        gap = min(c - profile.c_min, profile.c_max - c, MAX_PANEL_WIDTH)
        frequency = rho * math.log(truncation + math.e) + abs(math.log(z.modulus)) + 1.0
        width = min(MAX_PANEL_WIDTH, 20.0 / frequency)
        breakpoints = _breakpoints(truncation, gap, width)
        contour = ContourSpec(c, truncation, breakpoints.size - 1)
        return contour, breakpoints, edge

    @classmethod
    @Precondition(Method.CONTOUR)
    def evaluate(
        cls,
        spec: HFunctionSpec,
        z: Argument,
        opts: Optional[QuadratureOptions] = None,
        abscissa: Optional[float] = None,
    ) -> EvalResult:
        """ 패널 수를 두 배씩 늘리며 연속 값의 차이가 rel_tol·|value| 이하가 될 때까지 반복

        OutsideConvergenceSector: 섹터 밖 (사전조건)
        BudgetExceeded: max_nodes 안에서 수렴하지 못함
        """
        opts = opts or QuadratureOptions()
        contour, breakpoints, edge = cls.plan(spec, z, opts, abscissa)
        profile = convergence_profile(spec)
        kappa = profile.sector_halfwidth - abs(z.phase)
        tail = 2 * math.exp(edge) / kappa / (2 * math.pi) if math.isfinite(edge) else 0.0

        nodes = (breakpoints.size - 1) * NODES_PER_PANEL
        if nodes > opts.max_nodes:
            raise BudgetExceeded(
                f"초기 패널만으로 노드 예산을 넘습니다. -> {nodes} > {opts.max_nodes}", spec, z
            )
        value, _ = _panel_sum(spec, z, contour.abscissa, breakpoints)
        used = nodes

        for level in range(1, MAX_LEVELS + 1):
            breakpoints = _split(breakpoints)
            nodes = (breakpoints.size - 1) * NODES_PER_PANEL
            if used + nodes > opts.max_nodes:
                break
            refined, mass = _panel_sum(spec, z, contour.abscissa, breakpoints)
            used += nodes
            diff = abs(refined - value)
            value = refined
            logger.debug(
                "contour level=%d panels=%d value=%r diff=%.3e",
                level,
                breakpoints.size - 1,
                value,
                diff,
            )
            if diff <= opts.rel_tol * max(abs(value), CANCELLATION_FLOOR * mass):
                return EvalResult(
                    value=value,
                    error_estimate=diff + tail,
                    method=Method.CONTOUR,
                    nodes_used=used,
                    contour=ContourSpec(
                        contour.abscissa, contour.truncation, breakpoints.size - 1
                    ),
                )

        raise BudgetExceeded(
            f"노드 예산 안에서 수렴하지 못했습니다. -> nodes={used}, max={opts.max_nodes}",
            spec,
            z,
        )
