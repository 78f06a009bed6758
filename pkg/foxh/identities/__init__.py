from .base import (
    IdentityId,
    IdentityParams,
    WeightedTerm,
    IdentityCase,
    TermRecord,
    SampleRecord,
    SampleError,
    VerificationReport,
    DEFAULT_BASE,
)
from .builders import MainBuilder as IdentityMain
from .builders import R1981Builder as IdentityR1981
from .builders import RMultiBuilder as IdentityRMulti
from .builders import G41Builder as IdentityG41
from .builders import G42Builder as IdentityG42
from .builders import G43Builder as IdentityG43
from .builders import build_identity
from .sector import admissible_sector, restrict_samples, within_sector
from .verify import verify, DEFAULT_VERIFY_TOL
from .kernel import (
    KernelResidual,
    integrand_check,
    integrand_residual,
    kernel_residual,
    kernel_grid,
    kernel_checks,
)


__all__ = (
    "IdentityId",
    "IdentityParams",
    "WeightedTerm",
    "IdentityCase",
    "TermRecord",
    "SampleRecord",
    "SampleError",
    "VerificationReport",
    "KernelResidual",
    "IdentityAPI",
    "DEFAULT_BASE",
    "DEFAULT_VERIFY_TOL",
    "build_identity",
    "admissible_sector",
    "restrict_samples",
    "within_sector",
    "verify",
    "integrand_check",
    "integrand_residual",
    "kernel_residual",
    "kernel_grid",
    "kernel_checks",
)


class IdentityAPI:
    MAIN = IdentityMain
    R1981 = IdentityR1981
    RMULTI = IdentityRMulti
    G41 = IdentityG41
    G42 = IdentityG42
    G43 = IdentityG43
