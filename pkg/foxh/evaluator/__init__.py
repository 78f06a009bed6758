from typing import Optional

from ..hspec import Argument, HFunctionSpec
from .base import (
    Method,
    QuadratureOptions,
    ContourSpec,
    EvalResult,
    BaseEvaluator,
    EvaluatorRegistry,
    DEFAULT_REL_TOL,
    DEFAULT_MAX_NODES,
    DEFAULT_TAIL_SAFETY,
    SECTOR_MARGIN,
)
from .contour import ContourEvaluator, default_abscissa
from .series import SeriesEvaluator
from .closed_form import ClosedForm, ClosedFormEvaluator, reduce_closed_form
from .catalog import ORACLE_CATALOG


__all__ = (
    "Method",
    "QuadratureOptions",
    "ContourSpec",
    "EvalResult",
    "BaseEvaluator",
    "EvaluatorRegistry",
    "ClosedForm",
    "ORACLE_CATALOG",
    "DEFAULT_REL_TOL",
    "DEFAULT_MAX_NODES",
    "DEFAULT_TAIL_SAFETY",
    "SECTOR_MARGIN",
    "default_abscissa",
    "evaluate",
    "evaluate_contour",
    "evaluate_series",
    "evaluate_closed_form",
    "reduce_closed_form",
)


def evaluate(
    spec: HFunctionSpec,
    z: Argument,
    opts: Optional[QuadratureOptions] = None,
    method: Method = Method.CONTOUR,
    **kwargs,
) -> EvalResult:
    return EvaluatorRegistry.get(method).evaluate(spec, z, opts, **kwargs)


def evaluate_contour(
    spec: HFunctionSpec,
    z: Argument,
    opts: Optional[QuadratureOptions] = None,
    abscissa: Optional[float] = None,
) -> EvalResult:
    return ContourEvaluator.evaluate(spec, z, opts, abscissa=abscissa)


def evaluate_series(
    spec: HFunctionSpec, z: Argument, opts: Optional[QuadratureOptions] = None
) -> EvalResult:
    return SeriesEvaluator.evaluate(spec, z, opts)


def evaluate_closed_form(spec: HFunctionSpec, z: Argument) -> EvalResult:
    return ClosedFormEvaluator.evaluate(spec, z)


EvaluatorRegistry.set_auto()
