""" H-function 수치 평가 추상화를 위한 클래스 """
import enum
import logging
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass
from functools import wraps
from typing import Any, Callable, Dict, Optional, Tuple, Type

from ..exceptions import LogarithmicCase, OutsideConvergenceSector
from ..hspec import Argument, HFunctionSpec, convergence_profile, validate

__all__ = (
    "Method",
    "QuadratureOptions",
    "ContourSpec",
    "EvalResult",
    "IEvaluationPrecondition",
    "Precondition",
    "BaseEvaluator",
    "EvaluatorRegistry",
    "DEFAULT_REL_TOL",
    "DEFAULT_MAX_NODES",
    "DEFAULT_TAIL_SAFETY",
    "SECTOR_MARGIN",
)

logger = logging.getLogger(__name__)

DEFAULT_REL_TOL: float = 1e-10
DEFAULT_MAX_NODES: int = 200000
DEFAULT_TAIL_SAFETY: float = 10.0
SECTOR_MARGIN: float = 1e-6


@enum.unique
class Method(enum.Enum):
    CONTOUR = "contour"
    SERIES = "series"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class QuadratureOptions:
    rel_tol: float = DEFAULT_REL_TOL
    max_nodes: int = DEFAULT_MAX_NODES
    tail_safety: float = DEFAULT_TAIL_SAFETY

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol 은 양수여야 합니다. -> {self.rel_tol}")
        if self.max_nodes < 64:
            raise ValueError(f"max_nodes 는 64 이상이어야 합니다. -> {self.max_nodes}")
        if not self.tail_safety > 0:
            raise ValueError(f"tail_safety 는 양수여야 합니다. -> {self.tail_safety}")


@dataclass(frozen=True)
class ContourSpec:
    """ 적분경로 [c - iT, c + iT] 와 패널 수 """

    abscissa: float
    truncation: float
    panels: int


@dataclass(frozen=True)
class EvalResult:
    """ 평가 결과

    error_estimate 는 연속한 세분 단계의 차이(및 꼬리 추정)이며 엄밀한 오차 한계가 아니다.
    """

    value: complex
    error_estimate: float
    method: Method
    nodes_used: int
    contour: Optional[ContourSpec] = None

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "error_estimate", float(self.error_estimate))
        object.__setattr__(self, "nodes_used", int(self.nodes_used))


class IEvaluationPrecondition(metaclass=ABCMeta):
    """ evaluation pre-condition interface

    이 인터페이스를 상속한 모든 파생 클래스는 METHODS 에 해당하는 평가 직전에 실행됨
    """

    METHODS: Tuple[Method, ...] = ()

    @staticmethod
    @abstractmethod
    def check(spec: HFunctionSpec, z: Argument) -> None:
        pass


class _SectorCheck(IEvaluationPrecondition):
    """ a* > 0 이고 |arg z| < a*π/2 - margin 이어야 수직 경로 적분이 수렴 """

    METHODS = (Method.CONTOUR,)

    @staticmethod
    def check(spec: HFunctionSpec, z: Argument) -> None:
        profile = convergence_profile(spec)
        if profile.a_star <= 0:
            raise OutsideConvergenceSector(
                f"a* 가 양수가 아닙니다. -> a*={profile.a_star}", spec, z
            )
        if not abs(z.phase) < profile.sector_halfwidth - SECTOR_MARGIN:
            raise OutsideConvergenceSector(
                f"수렴 섹터 밖의 인자입니다. -> |phase|={abs(z.phase)}, "
                f"halfwidth={profile.sector_halfwidth}",
                spec,
                z,
            )


class _SimplePoleCheck(IEvaluationPrecondition):
    """ 잔류 급수는 오른쪽 극점이 모두 단순극점일 때만 사용 """

    METHODS = (Method.SERIES,)

    @staticmethod
    def check(spec: HFunctionSpec, z: Argument) -> None:
        if not spec.simple_poles:
            raise LogarithmicCase(
                "오른쪽 극점이 겹칩니다 (로그 경우).", spec, z
            )


class Precondition:
    """ 평가 함수의 사전조건 처리를 위한 데코레이터

    명세를 검증한 뒤 해당 Method 의 IEvaluationPrecondition 파생 클래스를 모두 실행
    """

    def __init__(self, method: Method):
        self.method = method

    def __call__(self, evaluate: Callable[..., EvalResult]) -> Callable[..., EvalResult]:
        @wraps(evaluate)
        def check_condition(
            cls: Type["BaseEvaluator"],
            spec: HFunctionSpec,
            z: Argument,
            *args: Any,
            **kwargs: Any,
        ) -> EvalResult:
            spec = validate(spec)
            subclass: Type[IEvaluationPrecondition]
            for subclass in IEvaluationPrecondition.__subclasses__():
                if self.method in subclass.METHODS:
                    subclass.check(spec, z)
            return evaluate(cls, spec, z, *args, **kwargs)

        return check_condition


class BaseEvaluator(metaclass=ABCMeta):
    """ H-function evaluator abstract class

    파생 클래스는 METHOD 와 evaluate 만 구현
    """

    METHOD: Method

    @classmethod
    @abstractmethod
    def evaluate(
        cls,
        spec: HFunctionSpec,
        z: Argument,
        opts: Optional[QuadratureOptions] = None,
        **kwargs: Any,
    ) -> EvalResult:
        pass


class EvaluatorRegistry:
    backends: Dict[Method, Type[BaseEvaluator]] = {}

    @classmethod
    def set_auto(cls):
        evaluator: Type[BaseEvaluator]
        for evaluator in BaseEvaluator.__subclasses__():
            cls.backends[evaluator.METHOD] = evaluator

    @classmethod
    def set(cls, evaluator: Type[BaseEvaluator]):
        cls.backends[evaluator.METHOD] = evaluator

    @classmethod
    def get(cls, method: Method) -> Type[BaseEvaluator]:
        return cls.backends[method]
