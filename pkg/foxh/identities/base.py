""" 항등식 양변을 표현하는 데이터 클래스 """
import enum
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from ..hspec import Argument, HFunctionSpec, validate

__all__ = (
    "IdentityId",
    "IdentityParams",
    "WeightedTerm",
    "IdentityCase",
    "TermRecord",
    "SampleRecord",
    "SampleError",
    "SampleOutcome",
    "VerificationReport",
    "DEFAULT_BASE",
    "RESIDUAL_FLOOR",
)

RESIDUAL_FLOOR: float = 1e-300

DEFAULT_BASE: HFunctionSpec = validate(HFunctionSpec.build(1, 1, [(0, 1)], [(0, 1)]))


@enum.unique
class IdentityId(enum.Enum):
    R1981 = "R1981"
    RMULTI = "RMULTI"
    MAIN = "MAIN"
    G41 = "G41"
    G42 = "G42"
    G43 = "G43"


@dataclass(frozen=True)
class IdentityParams:
    """ α, β 는 실수. λ, δ 중 어느 쪽이 쓰이는지는 항등식마다 다르다 """

    alpha: float = 0.0
    beta: float = 0.0
    lam: float = 0.0
    delta: float = 0.0
    base: HFunctionSpec = DEFAULT_BASE

    def __post_init__(self):
        for name in ("alpha", "beta", "lam", "delta"):
            object.__setattr__(self, name, float(getattr(self, name)))


@dataclass(frozen=True)
class WeightedTerm:
    """ prefactor · H(spec, z·e^{i·phase_shift}) """

    prefactor: complex
    spec: HFunctionSpec
    phase_shift: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "prefactor", complex(self.prefactor))
        if self.prefactor == 0:
            raise ValueError("prefactor 는 0 이 아니어야 합니다.")

    def argument(self, z: Argument) -> Argument:
        return z.rotate(self.phase_shift)


@dataclass(frozen=True)
class IdentityCase:
    id: IdentityId
    lhs: Tuple[WeightedTerm, ...]
    rhs: Tuple[WeightedTerm, ...]
    params: IdentityParams
    notes: Tuple[str, ...] = ()

    @property
    def terms(self) -> List[Tuple[str, int, WeightedTerm]]:
        return [("lhs", j, x) for j, x in enumerate(self.lhs)] + [
            ("rhs", j, x) for j, x in enumerate(self.rhs)
        ]


@dataclass
class TermRecord:
    side: str
    index: int
    prefactor: complex
    phase_shift: float
    value: complex
    error_estimate: float
    nodes_used: int


@dataclass
class SampleRecord:
    argument: Argument
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    passed: bool
    terms: List[TermRecord] = field(default_factory=list)

    @classmethod
    def of(cls, argument: Argument, terms: List[TermRecord], tol: float) -> "SampleRecord":
        lhs = sum((x.prefactor * x.value for x in terms if x.side == "lhs"), 0j)
        rhs = sum((x.prefactor * x.value for x in terms if x.side == "rhs"), 0j)
        residual = abs(lhs - rhs)
        relative = residual / max(abs(lhs), RESIDUAL_FLOOR)
        passed = math.isfinite(relative) and relative <= tol
        return cls(argument, lhs, rhs, residual, relative, passed, terms)


@dataclass
class SampleError:
    argument: Argument
    error: Dict[str, Any]
    passed: bool = False


SampleOutcome = Union[SampleRecord, SampleError]


@dataclass
class VerificationReport:
    id: IdentityId
    tol: float
    records: List[SampleOutcome] = field(default_factory=list)
    notes: Tuple[str, ...] = ()
    meta: Dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(x.passed for x in self.records)

    @property
    def worst(self) -> Optional[float]:
        residuals = [x.rel_residual for x in self.records if isinstance(x, SampleRecord)]
        return max(residuals) if residuals else None
