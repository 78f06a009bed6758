from .__version__ import *
from .exceptions import *
from .hspec import (
    ParamPair,
    HFunctionSpec,
    Argument,
    ConvergenceProfile,
    validate,
    convergence_profile,
    pole_sets,
    contour_window,
    prepend_pair,
    append_pair,
)
from .gammakit import LogComplex, property_suite
from .mellin import theta, integrand, sample
from .codec import spec_from_json, spec_to_json, load_spec, dumps_report
from .evaluator import (
    Method,
    QuadratureOptions,
    EvalResult,
    evaluate,
    evaluate_contour,
    evaluate_series,
    evaluate_closed_form,
    reduce_closed_form,
)
from .identities import (
    IdentityId,
    IdentityParams,
    IdentityCase,
    IdentityAPI,
    VerificationReport,
    build_identity,
    admissible_sector,
    verify,
    integrand_residual,
    kernel_residual,
)

__all__ = (
    "__title__",
    "__description__",
    "__url__",
    "__version__",
    "__author__",
    "__license__",
    "__copyright__",
    "ParamPair",
    "HFunctionSpec",
    "Argument",
    "ConvergenceProfile",
    "validate",
    "convergence_profile",
    "pole_sets",
    "contour_window",
    "prepend_pair",
    "append_pair",
    "LogComplex",
    "property_suite",
    "theta",
    "integrand",
    "sample",
    "spec_from_json",
    "spec_to_json",
    "load_spec",
    "dumps_report",
    "Method",
    "QuadratureOptions",
    "EvalResult",
    "evaluate",
    "evaluate_contour",
    "evaluate_series",
    "evaluate_closed_form",
    "reduce_closed_form",
    "IdentityId",
    "IdentityParams",
    "IdentityCase",
    "IdentityAPI",
    "VerificationReport",
    "build_identity",
    "admissible_sector",
    "verify",
    "integrand_residual",
    "kernel_residual",
    "RootError",
    "SpecError",
    "GammaPoleError",
    "EvaluationError",
    "IdentityError",
    "UsageError",
)
