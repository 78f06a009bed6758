""" eval / verify / oracle / gammacheck 명령

각 명령은 보고서를 기록하고 종료 코드를 돌려준다.
"""
import logging
from dataclasses import asdict
from functools import partial
from typing import Any, Callable, Dict, List

from ..codec import load_spec, spec_to_json
from ..evaluator import (
    ORACLE_CATALOG,
    SECTOR_MARGIN,
    EvalResult,
    QuadratureOptions,
    evaluate,
    evaluate_closed_form,
    evaluate_contour,
    evaluate_series,
    reduce_closed_form,
)
from ..evaluator.catalog import CLOSED_FORM_MODULI
from ..exceptions import (
    EmptyAdmissibleRegion,
    GammaPoleError,
    IdentityError,
    RootError,
    SpecError,
    UsageError,
)
from ..gammakit import property_suite
from ..hspec import Argument, HFunctionSpec, convergence_profile, validate
from ..identities import (
    DEFAULT_BASE,
    IdentityCase,
    IdentityId,
    IdentityParams,
    admissible_sector,
    build_identity,
    integrand_check,
    kernel_grid,
    kernel_residual,
    restrict_samples,
    verify,
)
from ..identities.base import RESIDUAL_FLOOR
from ..runner import gather_in_pool
from .config import Command, RunConfig
from .report import (
    VERIFY_COLUMNS,
    argument_to_dict,
    error_to_dict,
    result_to_dict,
    verification_rows,
    verification_to_dict,
    write_report,
)

__all__ = (
    "run_eval",
    "run_verify",
    "run_oracle",
    "run_gammacheck",
    "COMMANDS",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_NUMERIC",
    "EXIT_EMPTY_REGION",
)

logger = logging.getLogger(__name__)

EXIT_OK: int = 0
EXIT_USAGE: int = 1
EXIT_NUMERIC: int = 2
EXIT_EMPTY_REGION: int = 3

MAIN_KERNEL_TOL: float = 1e-10
KERNEL_TOL: float = 1e-11
KERNEL_CHECKED = (IdentityId.MAIN, IdentityId.G41, IdentityId.G42, IdentityId.G43)

EVAL_COLUMNS = (
    "modulus",
    "phase",
    "value_re",
    "value_im",
    "error_estimate",
    "method",
    "nodes_used",
    "error",
)
ORACLE_COLUMNS = (
    "spec",
    "reference",
    "modulus",
    "phase",
    "contour_re",
    "contour_im",
    "reference_re",
    "reference_im",
    "relative",
    "passed",
    "error",
)
GAMMA_COLUMNS = ("check", "worst", "tolerance", "passed")


def _load_spec(path: str) -> HFunctionSpec:
    """ UsageError: 명세 파일을 읽거나 검증할 수 없음 """
    try:
        return validate(load_spec(path))
    except SpecError as e:
        raise UsageError(f"명세 파일이 올바르지 않습니다. -> {path}: {e}") from e


def _flat_error(row: Dict[str, Any]) -> Dict[str, Any]:
    flat = dict(row)
    if "error" in flat:
        flat["error"] = f'{flat["error"]["type"]}: {flat["error"]["message"]}'
    return flat


# eval


def _eval_point(spec: HFunctionSpec, z: Argument, config: RunConfig) -> Dict[str, Any]:
    row: Dict[str, Any] = argument_to_dict(z)
    try:
        row.update(result_to_dict(evaluate(spec, z, config.quadrature, config.method)))
    except RootError as e:
        logger.warning("eval failed at %s: %s", z, e)
        row["error"] = error_to_dict(e)
    return row


def run_eval(config: RunConfig) -> int:
    """ 0: 모든 격자점 성공, 2: 한 점 이상 실패 """
    spec = _load_spec(config.spec_path)
    calls = [partial(_eval_point, spec, Argument(r, p), config) for r, p in config.grid]
    points = gather_in_pool(calls, config.workers)
    failed = sum("error" in row for row in points)

    rows = []
    for row in points:
        flat = _flat_error(row)
        if "value" in flat:
            value = flat.pop("value")
            flat.update(value_re=value.real, value_im=value.imag)
        rows.append(flat)

    report = {"command": "eval", "spec": spec_to_json(spec), "points": points, "failed": failed}
    write_report(config, report, rows, EVAL_COLUMNS)
    return EXIT_NUMERIC if failed else EXIT_OK


# verify


def _kernel_report(case: IdentityCase, samples: List[Argument]) -> Dict[str, Any]:
    """ 항등식의 θ 수준 점별 검사 (MAIN 은 피적분 항등식도 함께) """
    tol = MAIN_KERNEL_TOL if case.id is IdentityId.MAIN else KERNEL_TOL
    try:
        grid = kernel_grid(case)
    except IdentityError as e:
        return {"tol": tol, "checks": [], "error": error_to_dict(e), "passed": False}

    checks = []
    for z in samples:
        for s in grid:
            entry: Dict[str, Any] = {**argument_to_dict(z), "s": s}
            try:
                entry["relative"] = kernel_residual(case, z, s).relative
                if case.id is IdentityId.MAIN:
                    entry["integrand_relative"] = integrand_check(case.params, z, s).relative
            except (GammaPoleError, IdentityError) as e:
                entry["error"] = error_to_dict(e)
            checks.append(entry)

    passed = all(
        "error" not in x and x["relative"] <= tol and x.get("integrand_relative", 0.0) <= tol
        for x in checks
    )
    return {"tol": tol, "checks": checks, "passed": passed}


def run_verify(config: RunConfig) -> int:
    """ 0: 통과, 2: 검증 실패, 3: 허용 영역이 비어 있음 """
    base = _load_spec(config.base_path) if config.base_path else DEFAULT_BASE
    params = IdentityParams(config.alpha, config.beta, config.lam, config.delta, base)
    try:
        case = build_identity(config.identity, params)
    except IdentityError as e:
        raise UsageError(f"항등식을 구성할 수 없습니다. -> {e}") from e

    report: Dict[str, Any] = {
        "command": "verify",
        "identity": case.id.value,
        "notes": list(case.notes),
    }
    grid = [Argument(r, p) for r, p in config.grid]
    try:
        bound, lo, hi = admissible_sector(case)
        samples = restrict_samples(case, grid)
        if not samples:
            raise EmptyAdmissibleRegion(
                f"요청한 격자가 허용 영역과 겹치지 않습니다. -> |phase| < {bound}"
            )
    except EmptyAdmissibleRegion as e:
        logger.error("%s", e)
        write_report(
            config, {**report, "error": error_to_dict(e), "verdict": "fail"}, [], VERIFY_COLUMNS
        )
        return EXIT_EMPTY_REGION

    result = verify(case, samples, config.tol, config.quadrature, config.workers)
    report.update(verification_to_dict(result))
    report["sector"] = {"phase_bound": bound, "min_modulus": lo, "max_modulus": hi}
    report["excluded"] = [argument_to_dict(z) for z in grid if z not in samples]

    passed = result.verdict
    if case.id in KERNEL_CHECKED:
        report["kernel"] = _kernel_report(case, samples)
        passed = passed and report["kernel"]["passed"]
    report["verdict"] = "pass" if passed else "fail"
    logger.info("verify %s verdict=%s", case.id.value, report["verdict"])

    write_report(config, report, verification_rows(result), VERIFY_COLUMNS)
    return EXIT_OK if passed else EXIT_NUMERIC


# oracle


def _compare(
    name: str,
    spec: HFunctionSpec,
    z: Argument,
    reference: str,
    reference_fn: Callable[[HFunctionSpec, Argument], EvalResult],
    opts: QuadratureOptions,
    tol: float,
) -> Dict[str, Any]:
    row: Dict[str, Any] = {"spec": name, "reference": reference, **argument_to_dict(z)}
    try:
        contour = evaluate_contour(spec, z, opts).value
        expected = reference_fn(spec, z).value
    except RootError as e:
        logger.warning("oracle %s/%s failed at %s: %s", name, reference, z, e)
        row.update(error=error_to_dict(e), passed=False)
        return row
    relative = abs(contour - expected) / max(abs(expected), RESIDUAL_FLOOR)
    row.update(contour=contour, expected=expected, relative=relative, passed=relative <= tol)
    return row


def run_oracle(config: RunConfig) -> int:
    """ 경로 적분 vs 잔류 급수 (목록 전체), 경로 적분 vs 닫힌 형태 (환원되는 명세)

    0: 모든 비교가 tol 이내, 2: 그 외
    """
    opts = config.quadrature
    series = partial(evaluate_series, opts=opts)
    calls = []
    for name, spec in sorted(ORACLE_CATALOG.items()):
        for r, p in config.grid:
            calls.append(
                partial(_compare, name, spec, Argument(r, p), "series", series, opts, config.tol)
            )
        if reduce_closed_form(spec) is None:
            continue
        halfwidth = convergence_profile(spec).sector_halfwidth
        phases = sorted({p for p in config.phases if abs(p) < halfwidth - SECTOR_MARGIN})
        for r in CLOSED_FORM_MODULI:
            for p in phases:
                calls.append(
                    partial(
                        _compare,
                        name,
                        spec,
                        Argument(r, p),
                        "closed_form",
                        evaluate_closed_form,
                        opts,
                        config.tol,
                    )
                )
    comparisons = gather_in_pool(calls, config.workers)
    failed = sum(not row["passed"] for row in comparisons)

    rows = []
    for row in comparisons:
        flat = _flat_error(row)
        for key in ("contour", "expected"):
            if key in flat:
                value = flat.pop(key)
                prefix = "contour" if key == "contour" else "reference"
                flat.update({f"{prefix}_re": value.real, f"{prefix}_im": value.imag})
        rows.append(flat)

    report = {
        "command": "oracle",
        "comparisons": comparisons,
        "failed": failed,
        "verdict": "fail" if failed else "pass",
    }
    write_report(config, report, rows, ORACLE_COLUMNS)
    return EXIT_NUMERIC if failed else EXIT_OK


# gammacheck


def run_gammacheck(config: RunConfig) -> int:
    """ 0: 모든 잔차가 허용오차 이내, 2: 하나라도 초과 (최악의 표본을 보고서에 기록) """
    result = property_suite(config.count, config.seed, config.inject_fault)
    rows = [
        {
            "check": name,
            "worst": worst,
            "tolerance": result.tolerances[name],
            "passed": worst <= result.tolerances[name],
        }
        for name, worst in sorted(result.worst.items())
    ]
    report = {
        "command": "gammacheck",
        **asdict(result),
        "verdict": "pass" if result.passed else "fail",
    }
    if not result.passed:
        logger.error("gamma checks failed: %s", [x["check"] for x in rows if not x["passed"]])
    write_report(config, report, rows, GAMMA_COLUMNS)
    return EXIT_OK if result.passed else EXIT_NUMERIC


COMMANDS: Dict[Command, Callable[[RunConfig], int]] = {
    Command.EVAL: run_eval,
    Command.VERIFY: run_verify,
    Command.ORACLE: run_oracle,
    Command.GAMMACHECK: run_gammacheck,
}
