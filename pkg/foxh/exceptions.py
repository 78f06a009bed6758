""" 패키지에서 사용되는 예외

- RootError
    - SpecError
        - IndexOutOfRange
        - NonPositiveWeight
        - NoSeparatingContour
        - SpecFormatError
    - GammaPoleError
        - PoleAtNonPositiveInteger
        - PoleAtInteger
        - PoleAtHalfInteger
        - PoleInFactor (parameter에 factor 가 추가됨)
        - PoleOfNumerator
        - PoleAtS
    - EvaluationError (parameter에 spec, argument 가 추가됨)
        - OutsideConvergenceSector
        - BudgetExceeded
        - LogarithmicCase
        - SeriesDiverged
        - NotReducible
    - IdentityError
        - InvalidParams
        - SpecValidationFailed
        - EmptyAdmissibleRegion
    - UsageError
"""

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .hspec import HFunctionSpec, Argument

__all__ = (
    "RootError",
    "SpecError",
    "IndexOutOfRange",
    "NonPositiveWeight",
    "NoSeparatingContour",
    "SpecFormatError",
    "GammaPoleError",
    "PoleAtNonPositiveInteger",
    "PoleAtInteger",
    "PoleAtHalfInteger",
    "PoleInFactor",
    "PoleOfNumerator",
    "PoleAtS",
    "EvaluationError",
    "OutsideConvergenceSector",
    "BudgetExceeded",
    "LogarithmicCase",
    "SeriesDiverged",
    "NotReducible",
    "IdentityError",
    "InvalidParams",
    "SpecValidationFailed",
    "EmptyAdmissibleRegion",
    "UsageError",
)


class RootError(Exception):
    """ 모듈 최상위 에러 """


class SpecError(RootError):
    """ H-function 파라미터 명세와 관련된 top-level 에러 """


class IndexOutOfRange(SpecError):
    """ m > q 또는 n > p (또는 음수 인덱스) """


class NonPositiveWeight(SpecError):
    """ e_j 또는 f_j 가 0 이하 """


class NoSeparatingContour(SpecError):
    """ 왼쪽/오른쪽 극점 띠가 겹쳐 수직 적분경로가 존재하지 않음 """


class SpecFormatError(SpecError):
    """ JSON 명세 구문 오류 """


class GammaPoleError(RootError):
    """ 감마함수 극점과 관련된 top-level 에러 """


class PoleAtNonPositiveInteger(GammaPoleError):
    """ log_gamma 의 인자가 0 이하의 정수 """


class PoleAtInteger(GammaPoleError):
    """ sin 반사공식의 인자가 정수 """


class PoleAtHalfInteger(GammaPoleError):
    """ cos 반사공식의 인자가 반정수 """


class PoleInFactor(GammaPoleError):
    """ 배가공식의 여섯 감마 인자 중 하나가 극점 (factor 로 식별) """

    def __init__(self, message, factor: str):
        super().__init__(message)
        self.factor = factor


class PoleOfNumerator(GammaPoleError):
    """ s 가 θ(s) 분자 감마의 극점 """


class PoleAtS(GammaPoleError):
    """ 피적분 항등식 검사 지점 s 가 관련 감마의 극점 """


class EvaluationError(RootError):
    """ H-function 수치값 계산과 관련된 top-level 에러 """

    def __init__(
        self,
        message,
        spec: Optional["HFunctionSpec"] = None,
        argument: Optional["Argument"] = None,
    ):
        super().__init__(message)
        self.spec = spec
        self.argument = argument


class OutsideConvergenceSector(EvaluationError):
    """ a* <= 0 이거나 |arg z| 가 수렴 섹터 밖 """


class BudgetExceeded(EvaluationError):
    """ 허용 노드 수 안에서 허용오차에 도달하지 못함 """


class LogarithmicCase(EvaluationError):
    """ 오른쪽 극점이 겹쳐 단순극점 급수를 쓸 수 없음 """


class SeriesDiverged(EvaluationError):
    """ 항 예산 안에서 잔류 급수가 수렴하지 않음 """


class NotReducible(EvaluationError):
    """ 닫힌 형태 목록에 없는 명세 """


class IdentityError(RootError):
    """ 항등식 구성/검증과 관련된 top-level 에러 """


class InvalidParams(IdentityError):
    """ 항등식 파라미터가 불변조건을 만족하지 않음 """


class SpecValidationFailed(IdentityError):
    """ 패딩된 명세가 검증을 통과하지 못함 """


class EmptyAdmissibleRegion(IdentityError):
    """ 수직 적분경로로 검증 가능한 위상 구간이 없음 """


class UsageError(RootError):
    """ CLI 입력 오류 """
