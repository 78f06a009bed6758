""" JSON/CSV 보고서 작성 """
import csv
import io
import logging
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

from ..codec import dumps_report
from ..evaluator import EvalResult
from ..hspec import Argument
from ..identities import SampleError, VerificationReport
from .config import OutputFormat, RunConfig

__all__ = (
    "argument_to_dict",
    "result_to_dict",
    "error_to_dict",
    "verification_to_dict",
    "verification_rows",
    "write_report",
)

logger = logging.getLogger(__name__)


def argument_to_dict(z: Argument) -> Dict[str, float]:
    return {"modulus": z.modulus, "phase": z.phase}


def result_to_dict(result: EvalResult) -> Dict[str, Any]:
    data = {
        "value": result.value,
        "error_estimate": result.error_estimate,
        "method": result.method.value,
        "nodes_used": result.nodes_used,
    }
    if result.contour is not None:
        data["contour"] = asdict(result.contour)
    return data


def error_to_dict(error: Exception) -> Dict[str, str]:
    return {"type": type(error).__name__, "message": str(error)}


def verification_to_dict(report: VerificationReport) -> Dict[str, Any]:
    samples = []
    for record in report.records:
        data: Dict[str, Any] = argument_to_dict(record.argument)
        data["passed"] = record.passed
        if isinstance(record, SampleError):
            data["error"] = record.error
        else:
            data.update(
                lhs=record.lhs,
                rhs=record.rhs,
                abs_residual=record.abs_residual,
                rel_residual=record.rel_residual,
                terms=[asdict(x) for x in record.terms],
            )
        samples.append(data)
    return {
        "identity": report.id.value,
        "tol": report.tol,
        "notes": list(report.notes),
        "samples": samples,
        "verdict": "pass" if report.verdict else "fail",
        "worst": report.worst,
    }


VERIFY_COLUMNS = (
    "modulus",
    "phase",
    "side",
    "index",
    "prefactor_re",
    "prefactor_im",
    "phase_shift",
    "value_re",
    "value_im",
    "error_estimate",
    "nodes_used",
    "rel_residual",
    "passed",
    "error",
)


def verification_rows(report: VerificationReport) -> List[Dict[str, Any]]:
    """ (표본, 변, 항) 마다 한 행 """
    rows = []
    for record in report.records:
        head = {**argument_to_dict(record.argument), "passed": record.passed}
        if isinstance(record, SampleError):
            rows.append({**head, "error": f'{record.error["type"]}: {record.error["message"]}'})
            continue
        for term in record.terms:
            rows.append(
                {
                    **head,
                    "side": term.side,
                    "index": term.index,
                    "prefactor_re": term.prefactor.real,
                    "prefactor_im": term.prefactor.imag,
                    "phase_shift": term.phase_shift,
                    "value_re": term.value.real,
                    "value_im": term.value.imag,
                    "error_estimate": term.error_estimate,
                    "nodes_used": term.nodes_used,
                    "rel_residual": record.rel_residual,
                }
            )
    return rows


def _dumps_csv(rows: Sequence[Mapping[str, Any]], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _csv_cell(row.get(key)) for key in columns})
    return buffer.getvalue()


def _csv_cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return value


def write_report(
    config: RunConfig,
    report: Mapping[str, Any],
    rows: Optional[Sequence[Mapping[str, Any]]] = None,
    columns: Sequence[str] = (),
) -> None:
    """ config.format 에 따라 JSON 보고서 또는 CSV 행을 config.out (없으면 표준출력) 에 기록 """
    if config.format is OutputFormat.CSV and rows is not None:
        text = _dumps_csv(rows, columns)
    else:
        text = dumps_report({**report, "config": config.to_dict()})

    if config.out is None:
        sys.stdout.write(text)
        return
    Path(config.out).write_text(text, encoding="utf-8")
    logger.info("report written to %s", config.out)
