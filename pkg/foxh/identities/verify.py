""" 구적법 수준의 항등식 검증 """
import logging
from functools import partial
from typing import List, Optional, Sequence, Union

from ..evaluator import EvalResult, QuadratureOptions, evaluate_contour
from ..exceptions import RootError
from ..hspec import Argument
from ..runner import gather_in_pool
from .base import (
    IdentityCase,
    SampleError,
    SampleOutcome,
    SampleRecord,
    TermRecord,
    VerificationReport,
    WeightedTerm,
)

__all__ = ("verify", "DEFAULT_VERIFY_TOL")

logger = logging.getLogger(__name__)

DEFAULT_VERIFY_TOL: float = 1e-6


def _evaluate_term(
    term: WeightedTerm, z: Argument, opts: Optional[QuadratureOptions]
) -> Union[EvalResult, RootError]:
    try:
        return evaluate_contour(term.spec, term.argument(z), opts)
    except RootError as e:
        return e


def _outcome(
    case: IdentityCase,
    z: Argument,
    results: Sequence[Union[EvalResult, RootError]],
    tol: float,
) -> SampleOutcome:
    records: List[TermRecord] = []
    for (side, index, term), result in zip(case.terms, results):
        if isinstance(result, RootError):
            logger.warning(
                "%s %s[%d] failed at %s: %s", case.id.value, side, index, z, result
            )
            return SampleError(
                z,
                {
                    "type": type(result).__name__,
                    "message": str(result),
                    "side": side,
                    "index": index,
                },
            )
        records.append(
            TermRecord(
                side,
                index,
                term.prefactor,
                term.phase_shift,
                result.value,
                result.error_estimate,
                result.nodes_used,
            )
        )
    return SampleRecord.of(z, records, tol)


def verify(
    case: IdentityCase,
    samples: Sequence[Argument],
    tol: float = DEFAULT_VERIFY_TOL,
    opts: Optional[QuadratureOptions] = None,
    workers: Optional[int] = None,
) -> VerificationReport:
    """ 표본마다 Σ lhs prefactor·H(spec, z·e^{iσ}) 와 rhs 를 비교

    평가 오류는 해당 표본을 실패로 기록하고 나머지 표본은 계속 진행한다.
    """
    terms = case.terms
    calls = [partial(_evaluate_term, term, z, opts) for z in samples for _, _, term in terms]
    results = gather_in_pool(calls, workers)

    width = len(terms)
    records = [
        _outcome(case, z, results[i * width : (i + 1) * width], tol)
        for i, z in enumerate(samples)
    ]
    report = VerificationReport(case.id, tol, records, case.notes)
    logger.info(
        "verify %s samples=%d verdict=%s worst=%s",
        case.id.value,
        len(records),
        "pass" if report.verdict else "fail",
        report.worst,
    )
    return report
