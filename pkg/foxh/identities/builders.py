""" 항등식별 양변 구성

모든 항은 기본 명세의 양쪽 파라미터 리스트 앞(분자 범위) 또는 뒤(분모 범위)에
같은 쌍을 덧붙여 만든다.
"""
import cmath
import logging
import math
from abc import ABCMeta, abstractmethod
from typing import Dict, List, Sequence, Tuple, Type, Union

from ..exceptions import InvalidParams, SpecError, SpecValidationFailed
from ..hspec import HFunctionSpec, PairLike, pad_spec, validate
from .base import IdentityCase, IdentityId, IdentityParams, WeightedTerm

__all__ = (
    "IIdentityBuilder",
    "MainBuilder",
    "R1981Builder",
    "RMultiBuilder",
    "G41Builder",
    "G42Builder",
    "G43Builder",
    "build_identity",
    "main_lhs_spec",
    "G43_NOTE",
)

logger = logging.getLogger(__name__)

Terms = Tuple[List[WeightedTerm], List[WeightedTerm]]

G43_NOTE = (
    "G43: 좌변은 (β,δ) 를 두 리스트의 분자 범위 앞에 붙이므로 H^{m+1,n+1}_{p+1,q+1} 로 구성한다 "
    "(인쇄된 첨자 H^{m,n}_{p+1,q+1} 과 다름)."
)


def _cis(phase: float) -> complex:
    return cmath.exp(1j * phase)


def _padded(
    base: HFunctionSpec, front: Sequence[PairLike] = (), back: Sequence[PairLike] = ()
) -> HFunctionSpec:
    return validate(pad_spec(base, front, back))


def _require_positive(params: IdentityParams, *names: str) -> None:
    for name in ("alpha", "beta", "lam", "delta"):
        value = getattr(params, name)
        if not math.isfinite(value):
            raise InvalidParams(f"파라미터가 유한하지 않습니다. -> {name}={value}")
    for name in ("lam", "delta"):
        value = getattr(params, name)
        if value < 0:
            raise InvalidParams(f"가중치 파라미터는 음수일 수 없습니다. -> {name}={value}")
    for name in names:
        value = getattr(params, name)
        if not value > 0:
            raise InvalidParams(f"가중치 파라미터는 양수여야 합니다. -> {name}={value}")


class IIdentityBuilder(metaclass=ABCMeta):
    """ identity builder interface

    이 인터페이스를 상속한 파생 클래스는 build_identity 가 ID 로 찾아 사용
    """

    ID: IdentityId
    REQUIRED: Tuple[str, ...] = ()
    NOTES: Tuple[str, ...] = ()

    @classmethod
    @abstractmethod
    def terms(cls, params: IdentityParams, base: HFunctionSpec) -> Terms:
        pass

    @classmethod
    def build(cls, params: IdentityParams) -> IdentityCase:
        """ InvalidParams: 파라미터 불변조건 위반
        SpecValidationFailed: 기본 명세나 패딩된 명세가 검증을 통과하지 못함
        """
        _require_positive(params, *cls.REQUIRED)
        try:
            base = validate(params.base)
            lhs, rhs = cls.terms(params, base)
        except SpecError as e:
            raise SpecValidationFailed(
                f"{cls.ID.value} 의 명세가 검증을 통과하지 못했습니다. -> {e}"
            ) from e
        logger.debug("built %s lhs=%d rhs=%d", cls.ID.value, len(lhs), len(rhs))
        return IdentityCase(cls.ID, tuple(lhs), tuple(rhs), params, cls.NOTES)


def main_lhs_spec(params: IdentityParams) -> HFunctionSpec:
    """ (β,δ) 를 앞에, (α,λ) 를 뒤에 덧붙인 H^{m+1,n+1}_{p+2,q+2} (MAIN, G41 공통 좌변) """
    return _padded(
        params.base, front=[(params.beta, params.delta)], back=[(params.alpha, params.lam)]
    )


class MainBuilder(IIdentityBuilder):
    ID = IdentityId.MAIN
    REQUIRED = ("lam", "delta")

    @classmethod
    def terms(cls, params: IdentityParams, base: HFunctionSpec) -> Terms:
        a, b, lam, delta = params.alpha, params.beta, params.lam, params.delta
        lhs = main_lhs_spec(params)
        rhs = _padded(base, front=[(2 * b, 2 * delta)])
        pi = math.pi
        return (
            [WeightedTerm(2j * pi, lhs)],
            [
                WeightedTerm(_cis(pi * (a + b)), rhs, -pi * (lam + delta)),
                WeightedTerm(_cis(pi * (a - b)), rhs, -pi * (lam - delta)),
                WeightedTerm(-_cis(-pi * (a - b)), rhs, pi * (lam - delta)),
                WeightedTerm(-_cis(-pi * (a + b)), rhs, pi * (lam + delta)),
            ],
        )


class R1981Builder(IIdentityBuilder):
    ID = IdentityId.R1981
    REQUIRED = ("lam",)

    @classmethod
    def terms(cls, params: IdentityParams, base: HFunctionSpec) -> Terms:
        a, lam = params.alpha, params.lam
        lhs = _padded(base, back=[(a, lam)])
        scale = 1 / (2j * math.pi)
        return (
            [WeightedTerm(1, lhs)],
            [
                WeightedTerm(scale * _cis(math.pi * a), base, -math.pi * lam),
                WeightedTerm(-scale * _cis(-math.pi * a), base, math.pi * lam),
            ],
        )


class RMultiBuilder(IIdentityBuilder):
    ID = IdentityId.RMULTI
    REQUIRED = ("lam",)

    @classmethod
    def terms(cls, params: IdentityParams, base: HFunctionSpec) -> Terms:
        a, lam = params.alpha, params.lam
        lhs = _padded(base, front=[(a, lam)])
        rhs = _padded(base, front=[(2 * a, 2 * lam)])
        return (
            [WeightedTerm(1, lhs)],
            [
                WeightedTerm(_cis(math.pi * a), rhs, -math.pi * lam),
                WeightedTerm(_cis(-math.pi * a), rhs, math.pi * lam),
            ],
        )


class G41Builder(IIdentityBuilder):
    ID = IdentityId.G41
    REQUIRED = ("lam", "delta")

    @classmethod
    def terms(cls, params: IdentityParams, base: HFunctionSpec) -> Terms:
        a, b, lam, delta = params.alpha, params.beta, params.lam, params.delta
        lhs = main_lhs_spec(params)
        rhs = _padded(
            base,
            front=[(2 * b, 2 * delta), (0.5 + a, lam)],
            back=[(2 * a, 2 * lam), (0.5 + b, delta)],
        )
        return [WeightedTerm(1, lhs)], [WeightedTerm(1, rhs)]


class G42Builder(IIdentityBuilder):
    ID = IdentityId.G42
    REQUIRED = ("lam",)

    @classmethod
    def terms(cls, params: IdentityParams, base: HFunctionSpec) -> Terms:
        a, lam = params.alpha, params.lam
        lhs = _padded(base, back=[(a, lam)])
        rhs = _padded(base, front=[(0.5 + a, lam)], back=[(2 * a, 2 * lam)])
        return [WeightedTerm(1, lhs)], [WeightedTerm(1 / (2 * math.pi), rhs)]


class G43Builder(IIdentityBuilder):
    ID = IdentityId.G43
    REQUIRED = ("delta",)
    NOTES = (G43_NOTE,)

    @classmethod
    def terms(cls, params: IdentityParams, base: HFunctionSpec) -> Terms:
        b, delta = params.beta, params.delta
        lhs = _padded(base, front=[(b, delta)])
        rhs = _padded(base, front=[(2 * b, 2 * delta)], back=[(0.5 + b, delta)])
        return [WeightedTerm(1, lhs)], [WeightedTerm(2 * math.pi, rhs)]


def _builders() -> Dict[IdentityId, Type[IIdentityBuilder]]:
    return {builder.ID: builder for builder in IIdentityBuilder.__subclasses__()}


def build_identity(
    identity: Union[IdentityId, str], params: IdentityParams
) -> IdentityCase:
    """ InvalidParams: 알 수 없는 항등식 이름 또는 파라미터 불변조건 위반 """
    try:
        identity = IdentityId(identity)
    except ValueError as e:
        raise InvalidParams(f"알 수 없는 항등식입니다. -> {identity!r}") from e
    return _builders()[identity].build(params)
