""" 닫힌 형태로 환원되는 명세 목록 (정답값)

H^{1,0}_{0,1}[z | -; (b,1)]      = z^b e^{-z}
H^{1,1}_{1,1}[z | (a,1); (b,1)]  = Γ(c) z^b (1+z)^{-c},  c = 1 - a + b, Re c > 0
"""
import cmath
from dataclasses import dataclass
from typing import Callable, Optional

from ..exceptions import NotReducible
from ..gammakit import log_gamma
from ..hspec import Argument, HFunctionSpec, validate
from .base import BaseEvaluator, EvalResult, Method, Precondition, QuadratureOptions

__all__ = ("ClosedForm", "ClosedFormEvaluator", "reduce_closed_form")


@dataclass(frozen=True)
class ClosedForm:
    tag: str
    function: Callable[[Argument], complex]

    def __call__(self, z: Argument) -> complex:
        return self.function(z)


def _exponential(b: complex) -> ClosedForm:
    def function(z: Argument) -> complex:
        return cmath.exp(b * z.log() - z.to_complex())

    return ClosedForm("exp", function)


def _binomial(a: complex, b: complex) -> ClosedForm:
    c = 1 - a + b
    log_gamma_c = log_gamma(c).log()

    def function(z: Argument) -> complex:
        return cmath.exp(log_gamma_c + b * z.log() - c * cmath.log(1 + z.to_complex()))

    return ClosedForm("binomial", function)


def reduce_closed_form(spec: HFunctionSpec) -> Optional[ClosedForm]:
    """ 목록의 패턴이면 ClosedForm, 아니면 None """
    spec = validate(spec)
    weights = [x.weight for x in spec.upper + spec.lower]
    if any(w != 1.0 for w in weights):
        return None

    shape = (spec.m, spec.n, spec.p, spec.q)
    if shape == (1, 0, 0, 1):
        return _exponential(spec.lower[0].coeff)
    if shape == (1, 1, 1, 1):
        a, b = spec.upper[0].coeff, spec.lower[0].coeff
        if (1 - a + b).real > 0:
            return _binomial(a, b)
    return None


class ClosedFormEvaluator(BaseEvaluator):
    METHOD = Method.CLOSED_FORM

    @classmethod
    @Precondition(Method.CLOSED_FORM)
    def evaluate(
        cls,
        spec: HFunctionSpec,
        z: Argument,
        opts: Optional[QuadratureOptions] = None,
    ) -> EvalResult:
        """ NotReducible: 목록에 없는 명세 """
        form = reduce_closed_form(spec)
        if form is None:
            raise NotReducible(f"닫힌 형태가 없는 명세입니다. -> {spec}", spec, z)
        return EvalResult(
            value=form(z), error_estimate=0.0, method=Method.CLOSED_FORM, nodes_used=0
        )
