""" H-function 파라미터 명세와 수렴 기하

H^{m,n}_{p,q}[z | (a_j, e_j)_p ; (b_j, f_j)_q] 의 명세를 검증하고,
극점 띠(pole strip), 허용 적분경로 가로좌표, 허용 위상 섹터를 계산한다.
"""
import cmath
import logging
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from .exceptions import IndexOutOfRange, NonPositiveWeight, NoSeparatingContour, SpecError

__all__ = (
    "ParamPair",
    "HFunctionSpec",
    "Argument",
    "ConvergenceProfile",
    "validate",
    "convergence_profile",
    "pole_sets",
    "contour_window",
    "pad_spec",
    "prepend_pair",
    "append_pair",
    "POLE_COINCIDENCE_TOL",
)

logger = logging.getLogger(__name__)

POLE_COINCIDENCE_TOL: float = 1e-9
SIMPLE_POLE_SCAN: int = 256
CONTOUR_WINDOW: float = 10.0
OPEN_SIDE_SPAN: float = 1.0

PairLike = Union["ParamPair", Tuple[complex, float]]


@dataclass(frozen=True)
class ParamPair:
    """ (a_j, e_j) 또는 (b_j, f_j) 한 쌍 """

    coeff: complex
    weight: float

    def __post_init__(self):
        object.__setattr__(self, "coeff", complex(self.coeff))
        object.__setattr__(self, "weight", float(self.weight))

    @classmethod
    def of(cls, pair: PairLike) -> "ParamPair":
        if isinstance(pair, ParamPair):
            return pair
        coeff, weight = pair
        return cls(coeff, weight)


@dataclass(frozen=True)
class HFunctionSpec:
    """ H^{m,n}_{p,q} 파라미터 명세

    valid, simple_poles 는 validate 가 채우는 상태값이므로 비교에서 제외한다.
    """

    m: int
    n: int
    upper: Tuple[ParamPair, ...] = ()
    lower: Tuple[ParamPair, ...] = ()
    valid: bool = field(default=False, init=False, compare=False)
    simple_poles: bool = field(default=False, init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(ParamPair.of(x) for x in self.upper))
        object.__setattr__(self, "lower", tuple(ParamPair.of(x) for x in self.lower))

    @classmethod
    def build(
        cls, m: int, n: int, upper: Iterable[PairLike] = (), lower: Iterable[PairLike] = ()
    ) -> "HFunctionSpec":
        return cls(_as_index("m", m), _as_index("n", n), tuple(upper), tuple(lower))

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def __str__(self) -> str:
        def fmt(pairs):
            return ", ".join(f"({_fmt_coeff(x.coeff)},{x.weight:g})" for x in pairs)

        return (
            f"H^{{{self.m},{self.n}}}_{{{self.p},{self.q}}}"
            f"[{fmt(self.upper)}; {fmt(self.lower)}]"
        )


def _as_index(name: str, value) -> int:
    if isinstance(value, bool):
        raise SpecError(f"{name} 은 정수여야 합니다. -> {value!r}")
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise SpecError(f"{name} 은 정수여야 합니다. -> {value!r}") from None
    if not number.is_integer():
        raise SpecError(f"{name} 은 정수여야 합니다. -> {value!r}")
    return int(number)


def _fmt_coeff(c: complex) -> str:
    if c.imag == 0:
        return f"{c.real:g}"
    return f"{c.real:g}{c.imag:+g}i"


@dataclass(frozen=True)
class Argument:
    """ 로그 함수의 리만 곡면 위의 점 z = modulus · e^{i·phase}

    phase 는 2π 로 환원하지 않는다. z^s 는 항상 exp(s·(ln modulus + i·phase)).
    """

    modulus: float
    phase: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "modulus", float(self.modulus))
        object.__setattr__(self, "phase", float(self.phase))
        if not self.modulus > 0:
            raise ValueError(f"modulus 는 양수여야 합니다. -> {self.modulus}")

    @classmethod
    def from_complex(cls, z: complex) -> "Argument":
        return cls(abs(z), cmath.phase(z))

    def log(self) -> complex:
        return complex(math.log(self.modulus), self.phase)

    def rotate(self, shift: float) -> "Argument":
        return Argument(self.modulus, self.phase + shift)

    def to_complex(self) -> complex:
        return cmath.rect(self.modulus, self.phase)


@dataclass(frozen=True)
class ConvergenceProfile:
    a_star: float
    c_min: float
    c_max: float
    sector_halfwidth: float

    @property
    def strip_width(self) -> float:
        return self.c_max - self.c_min


def _strip(spec: HFunctionSpec) -> Tuple[float, float]:
    left = [(x.coeff.real - 1.0) / x.weight for x in spec.upper[: spec.n]]
    right = [x.coeff.real / x.weight for x in spec.lower[: spec.m]]
    return (max(left) if left else -math.inf, min(right) if right else math.inf)


def _right_poles_simple(spec: HFunctionSpec) -> bool:
    if spec.m < 2:
        return True
    k = np.arange(SIMPLE_POLE_SCAN)
    families = [(x.coeff + k) / x.weight for x in spec.lower[: spec.m]]
    for i in range(spec.m):
        for j in range(i + 1, spec.m):
            gap = np.abs(np.subtract.outer(families[i], families[j]))
            if np.any(gap < POLE_COINCIDENCE_TOL):
                return False
    return True


def validate(raw_spec: HFunctionSpec) -> HFunctionSpec:
    """ 명세의 불변조건을 검사하고 검증된 명세를 반환

    IndexOutOfRange: m > q 또는 n > p
    NonPositiveWeight: 가중치가 0 이하
    NoSeparatingContour: 극점 띠가 겹침
    """
    if raw_spec.valid:
        return raw_spec

    m, n, p, q = raw_spec.m, raw_spec.n, raw_spec.p, raw_spec.q
    if not 0 <= m <= q:
        raise IndexOutOfRange(f"m 은 0 이상 q 이하여야 합니다. -> m={m}, q={q}")
    if not 0 <= n <= p:
        raise IndexOutOfRange(f"n 은 0 이상 p 이하여야 합니다. -> n={n}, p={p}")

    for label, pairs in (("upper", raw_spec.upper), ("lower", raw_spec.lower)):
        for j, pair in enumerate(pairs, 1):
            if not pair.weight > 0:
                raise NonPositiveWeight(
                    f"가중치는 양수여야 합니다. -> {label}[{j}] weight={pair.weight}"
                )

    c_min, c_max = _strip(raw_spec)
    if not c_min < c_max:
        raise NoSeparatingContour(
            f"극점 띠를 분리하는 수직 경로가 없습니다. -> c_min={c_min}, c_max={c_max}"
        )

    simple = _right_poles_simple(raw_spec)
    if not simple:
        logger.debug("coincident right poles in %s", raw_spec)
    checked = replace(raw_spec)
    object.__setattr__(checked, "valid", True)
    object.__setattr__(checked, "simple_poles", simple)
    return checked


def convergence_profile(spec: HFunctionSpec) -> ConvergenceProfile:
    spec = validate(spec)
    e_num = sum(x.weight for x in spec.upper[: spec.n])
    e_den = sum(x.weight for x in spec.upper[spec.n :])
    f_num = sum(x.weight for x in spec.lower[: spec.m])
    f_den = sum(x.weight for x in spec.lower[spec.m :])
    a_star = e_num - e_den + f_num - f_den
    c_min, c_max = _strip(spec)
    return ConvergenceProfile(a_star, c_min, c_max, a_star * math.pi / 2)


def _sorted_by_real(values: np.ndarray) -> List[complex]:
    return [complex(x) for x in values[np.argsort(values.real, kind="stable")]]


def pole_sets(spec: HFunctionSpec, count: int) -> Tuple[List[complex], List[complex]]:
    """ 적분경로 띠에 가장 가까운 왼쪽/오른쪽 극점 count 개씩 (실수부 오름차순)

    겹치는 극점은 중복도만큼 반복된다.
    """
    spec = validate(spec)
    if count <= 0:
        return [], []
    k = np.arange(count)

    right = [(x.coeff + k) / x.weight for x in spec.lower[: spec.m]]
    left = [(x.coeff - 1.0 - k) / x.weight for x in spec.upper[: spec.n]]

    right_poles: List[complex] = []
    if right:
        merged = np.concatenate(right)
        right_poles = _sorted_by_real(merged)[:count]

    left_poles: List[complex] = []
    if left:
        merged = np.concatenate(left)
        left_poles = _sorted_by_real(merged)[-count:]
    return left_poles, right_poles


def contour_window(profile: ConvergenceProfile) -> Tuple[float, float]:
    """ 가로좌표를 고를 유한 구간

    무한한 쪽은 유한한 쪽에서 OPEN_SIDE_SPAN 만큼 떨어진 값으로 바꾸고 [-10, 10] 으로 자른다.
    """
    lo, hi = profile.c_min, profile.c_max
    if math.isinf(lo) and math.isinf(hi):
        return -OPEN_SIDE_SPAN, OPEN_SIDE_SPAN
    if math.isinf(lo):
        lo = hi - OPEN_SIDE_SPAN
    if math.isinf(hi):
        hi = lo + OPEN_SIDE_SPAN

    clipped = max(lo, -CONTOUR_WINDOW), min(hi, CONTOUR_WINDOW)
    if clipped[0] < clipped[1]:
        return clipped
    return lo, hi


def pad_spec(
    spec: HFunctionSpec,
    front: Sequence[PairLike] = (),
    back: Sequence[PairLike] = (),
) -> HFunctionSpec:
    """ 양쪽 리스트 앞(분자 범위)과 뒤(분모 범위)에 같은 쌍을 덧붙인 미검증 명세 """
    front = tuple(ParamPair.of(x) for x in front)
    back = tuple(ParamPair.of(x) for x in back)
    return HFunctionSpec(
        spec.m + len(front),
        spec.n + len(front),
        front + spec.upper + back,
        front + spec.lower + back,
    )


def prepend_pair(spec: HFunctionSpec, pair: PairLike) -> HFunctionSpec:
    return validate(pad_spec(spec, front=(pair,)))


def append_pair(spec: HFunctionSpec, pair: PairLike) -> HFunctionSpec:
    return validate(pad_spec(spec, back=(pair,)))
