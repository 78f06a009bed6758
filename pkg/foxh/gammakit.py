""" 복소 로그감마와 증명에 쓰이는 세 감마 항등식

모든 곱셈은 로그 공간(LogComplex)에서 이루어져 큰 |Im s| 에서도 넘침이 없다.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy import special

from .exceptions import (
    PoleAtNonPositiveInteger,
    PoleAtInteger,
    PoleAtHalfInteger,
    PoleInFactor,
)

__all__ = (
    "LogComplex",
    "log_gamma",
    "log_gamma_values",
    "pole_mask",
    "reflection_sin",
    "reflection_cos",
    "duplication_split",
    "GammaCheckReport",
    "property_suite",
    "LOG_PI",
    "LOG_2PI",
)

logger = logging.getLogger(__name__)

POLE_TOL: float = 1e-13
LOG_PI: float = math.log(math.pi)
LOG_2PI: float = math.log(2 * math.pi)
TWO_PI: float = 2 * math.pi

SUITE_TOL: float = 1e-12
RECURRENCE_TOL: float = 1e-13
POLE_CLEARANCE: float = 0.05


def _wrap(phase: float) -> float:
    """ (-π, π] 로 환원 """
    return phase - TWO_PI * math.ceil((phase - math.pi) / TWO_PI)


@dataclass(frozen=True)
class LogComplex:
    """ exp(log_modulus + i·phase) 로 표현한 0 이 아닌 복소수 (또는 is_zero 플래그)

    phase 는 누적만 하고 환원하지 않는다.
    """

    log_modulus: float
    phase: float
    is_zero: bool = field(default=False)

    @classmethod
    def from_log(cls, w: complex) -> "LogComplex":
        return cls(float(w.real), float(w.imag))

    @classmethod
    def from_complex(cls, z: complex) -> "LogComplex":
        if z == 0:
            return cls.zero()
        return cls(math.log(abs(z)), cmath.phase(z))

    @classmethod
    def zero(cls) -> "LogComplex":
        return cls(-math.inf, 0.0, True)

    def log(self) -> complex:
        return complex(self.log_modulus, self.phase)

    def to_complex(self) -> complex:
        if self.is_zero:
            return 0j
        return cmath.exp(self.log())

    def conjugate(self) -> "LogComplex":
        return LogComplex(self.log_modulus, -self.phase, self.is_zero)

    def __mul__(self, other: "LogComplex") -> "LogComplex":
        if self.is_zero or other.is_zero:
            return LogComplex.zero()
        return LogComplex(
            self.log_modulus + other.log_modulus, self.phase + other.phase
        )

    def __truediv__(self, other: "LogComplex") -> "LogComplex":
        if other.is_zero:
            raise ZeroDivisionError("LogComplex 영(0)으로 나눌 수 없습니다.")
        if self.is_zero:
            return LogComplex.zero()
        return LogComplex(
            self.log_modulus - other.log_modulus, self.phase - other.phase
        )

    def scale(self, w: complex) -> "LogComplex":
        """ exp(w) 를 곱함 """
        if self.is_zero:
            return self
        return LogComplex(self.log_modulus + w.real, self.phase + w.imag)

    def isclose(self, other: "LogComplex", tol: float = 1e-12) -> bool:
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return (
            abs(self.log_modulus - other.log_modulus) <= tol
            and abs(_wrap(self.phase - other.phase)) <= tol
        )


def pole_mask(z: ArrayLike) -> np.ndarray:
    """ 0 이하의 정수(감마 극점)인 원소 """
    z = np.asarray(z, dtype=np.complex128)
    nearest = np.round(z.real)
    return (
        (z.real < 0.5)
        & (np.abs(z.real - nearest) <= POLE_TOL * np.maximum(1.0, np.abs(nearest)))
        & (np.abs(z.imag) <= POLE_TOL)
    )


def log_gamma_values(z: ArrayLike) -> np.ndarray:
    """ 벡터화된 주가지 log Γ(z)

    scipy.special.loggamma 는 Re z < 0.1 에서 log Γ(1-z) 로부터 반사공식을 적용한다.
    PoleAtNonPositiveInteger: 원소 중 하나가 극점
    """
    z = np.asarray(z, dtype=np.complex128)
    poles = pole_mask(z)
    if np.any(poles):
        raise PoleAtNonPositiveInteger(
            f"감마함수의 극점입니다. -> z={complex(z[poles].flat[0])}"
        )
    return special.loggamma(z)


def log_gamma(z: complex) -> LogComplex:
    return LogComplex.from_log(complex(log_gamma_values(complex(z))))


def _is_integer(z: complex) -> bool:
    return abs(z.imag) <= POLE_TOL and abs(z.real - round(z.real)) <= POLE_TOL * max(
        1.0, abs(z.real)
    )


def reflection_sin(z: complex) -> complex:
    """ sin πz = π / (Γ(z)Γ(1-z)) """
    z = complex(z)
    if _is_integer(z):
        raise PoleAtInteger(f"정수 인자에서는 계산할 수 없습니다. -> z={z}")
    w = LOG_PI - complex(log_gamma_values(z)) - complex(log_gamma_values(1 - z))
    return cmath.exp(w)


def reflection_cos(z: complex) -> complex:
    """ cos πz = π / (Γ(½-z)Γ(½+z)) """
    z = complex(z)
    if _is_integer(z - 0.5):
        raise PoleAtHalfInteger(f"반정수 인자에서는 계산할 수 없습니다. -> z={z}")
    w = LOG_PI - complex(log_gamma_values(0.5 - z)) - complex(log_gamma_values(0.5 + z))
    return cmath.exp(w)


def _duplication_factors(beta: complex, delta: float, s: complex) -> Dict[str, complex]:
    x = beta - delta * s
    return {
        "Γ(β-δs)": x,
        "Γ(1-β+δs)": 1 - x,
        "Γ(2β-2δs)": 2 * x,
        "Γ(1-2β+2δs)": 1 - 2 * x,
        "Γ(½+β-δs)": 0.5 + x,
        "Γ(½-β+δs)": 0.5 - x,
    }


def duplication_split(
    beta: complex, delta: float, s: complex
) -> Tuple[LogComplex, LogComplex]:
    """ Γ(β-δs)Γ(1-β+δs) = 2π Γ(2β-2δs)Γ(1-2β+2δs) / (Γ(½+β-δs)Γ(½-β+δs))

    (lhs, rhs) 를 각각 독립적으로 로그 공간에서 계산한다.
    PoleInFactor: 여섯 인자 중 극점인 것 (factor 로 식별)
    """
    factors = _duplication_factors(complex(beta), float(delta), complex(s))
    logs: Dict[str, complex] = {}
    for name, arg in factors.items():
        try:
            logs[name] = complex(log_gamma_values(arg))
        except PoleAtNonPositiveInteger as e:
            raise PoleInFactor(f"인자가 극점에 있습니다. -> {name}, 인자={arg}", name) from e

    lhs = logs["Γ(β-δs)"] + logs["Γ(1-β+δs)"]
    rhs = (
        LOG_2PI
        + logs["Γ(2β-2δs)"]
        + logs["Γ(1-2β+2δs)"]
        - logs["Γ(½+β-δs)"]
        - logs["Γ(½-β+δs)"]
    )
    return LogComplex.from_log(lhs), LogComplex.from_log(rhs)


@dataclass
class GammaCheckReport:
    """ 감마 항등식 시드 표본 검사 결과 """

    count: int
    seed: int
    tolerances: Dict[str, float] = field(default_factory=dict)
    worst: Dict[str, float] = field(default_factory=dict)
    offenders: Dict[str, List[Dict[str, object]]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(
            value <= self.tolerances[name] for name, value in self.worst.items()
        )


def _sample_clear_of(rng: np.random.Generator, count: int, shift: float) -> np.ndarray:
    """ |Re z|, |Im z| <= 5 에서 정수+shift 로부터 POLE_CLEARANCE 이상 떨어진 표본 """
    out = np.empty(0, dtype=np.complex128)
    while out.size < count:
        z = rng.uniform(-5, 5, count) + 1j * rng.uniform(-5, 5, count)
        off = z - shift
        gap = np.abs(off - np.round(off.real))
        out = np.concatenate([out, z[gap >= POLE_CLEARANCE]])
    return out[:count]


def _relative(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.abs(a - b) / np.maximum(np.abs(b), np.finfo(float).tiny)


def _phase_gap(w: np.ndarray) -> np.ndarray:
    return np.abs(np.angle(np.exp(1j * w.imag)))


def _top(residuals: np.ndarray, points: np.ndarray, limit: int = 5) -> List[Dict[str, object]]:
    order = np.argsort(residuals)[::-1][:limit]
    return [
        {"point": complex(points[i]), "residual": float(residuals[i])} for i in order
    ]


def property_suite(
    count: int = 1000, seed: int = 0, inject_fault: bool = False
) -> GammaCheckReport:
    """ 반사공식 두 개, 배가 분할, 점화식을 시드 표본으로 검사

    inject_fault 는 검사 자체가 실패를 잡는지 확인하기 위한 훅이다.
    """
    report = GammaCheckReport(
        count=count,
        seed=seed,
        tolerances={
            "reflection_sin": SUITE_TOL,
            "reflection_cos": SUITE_TOL,
            "duplication_split": SUITE_TOL,
            "recurrence": RECURRENCE_TOL,
        },
    )
    if count <= 0:
        return report
    rng = np.random.default_rng(seed)

    # sin πz = π/(Γ(z)Γ(1-z)) = (e^{iπz} - e^{-iπz}) / 2i
    z = _sample_clear_of(rng, count, 0.0)
    via_gamma = np.exp(LOG_PI - log_gamma_values(z) - log_gamma_values(1 - z))
    via_exp = (np.exp(1j * np.pi * z) - np.exp(-1j * np.pi * z)) / 2j
    sin_res = _relative(via_gamma, via_exp)

    # cos πz = π/(Γ(½-z)Γ(½+z)) = (e^{iπz} + e^{-iπz}) / 2
    z_cos = _sample_clear_of(rng, count, 0.5)
    via_gamma = np.exp(LOG_PI - log_gamma_values(0.5 - z_cos) - log_gamma_values(0.5 + z_cos))
    via_exp = (np.exp(1j * np.pi * z_cos) + np.exp(-1j * np.pi * z_cos)) / 2
    cos_res = _relative(via_gamma, via_exp)

    # 배가 분할: 여섯 인자 모두 극점에서 POLE_CLEARANCE 이상 떨어진 (β, δ, s)
    beta = np.empty(0)
    delta = np.empty(0)
    s = np.empty(0, dtype=np.complex128)
    while s.size < count:
        b = rng.uniform(0, 1, count)
        d = rng.uniform(0.1, 1, count)
        t = rng.uniform(-2, 2, count) + 1j * rng.uniform(-20, 20, count)
        x = b - d * t
        args = np.stack([x, 1 - x, 2 * x, 1 - 2 * x, 0.5 + x, 0.5 - x])
        gap = np.abs(args - np.round(args.real))
        keep = np.all((gap >= POLE_CLEARANCE) | (args.real > 0.5), axis=0)
        beta, delta = np.concatenate([beta, b[keep]]), np.concatenate([delta, d[keep]])
        s = np.concatenate([s, t[keep]])
    beta, delta, s = beta[:count], delta[:count], s[:count]
    x = beta - delta * s
    lhs = log_gamma_values(x) + log_gamma_values(1 - x)
    rhs = (
        LOG_2PI
        + log_gamma_values(2 * x)
        + log_gamma_values(1 - 2 * x)
        - log_gamma_values(0.5 + x)
        - log_gamma_values(0.5 - x)
    )
    diff = lhs - rhs
    dup_res = np.maximum(np.abs(diff.real), _phase_gap(diff))

    # log Γ(z+1) = log Γ(z) + log z
    rec = log_gamma_values(z + 1) - log_gamma_values(z) - np.log(z)
    rec_res = np.abs(rec) / np.maximum(1.0, np.abs(log_gamma_values(z + 1)))

    if inject_fault:
        sin_res = sin_res.copy()
        sin_res[0] += 1e-6

    checks = {
        "reflection_sin": (sin_res, z),
        "reflection_cos": (cos_res, z_cos),
        "duplication_split": (dup_res, s),
        "recurrence": (rec_res, z),
    }
    for name, (residuals, points) in checks.items():
        report.worst[name] = float(np.max(residuals))
        report.offenders[name] = _top(residuals, points)
        logger.debug("gamma check %s worst=%.3e", name, report.worst[name])
    return report
