""" 명령행 인자 해석과 실행 설정 """
import argparse
import enum
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..evaluator import Method, QuadratureOptions
from ..evaluator.catalog import ORACLE_MODULI, ORACLE_PHASES
from ..exceptions import UsageError
from ..gammakit import SUITE_TOL
from ..identities import DEFAULT_VERIFY_TOL, IdentityId
from ..runner import DEFAULT_WORKERS

__all__ = ("Command", "OutputFormat", "RunConfig", "build_parser", "parse_config")


@enum.unique
class Command(enum.Enum):
    EVAL = "eval"
    VERIFY = "verify"
    ORACLE = "oracle"
    GAMMACHECK = "gammacheck"


@enum.unique
class OutputFormat(enum.Enum):
    JSON = "json"
    CSV = "csv"


ORACLE_TOL: float = 1e-8
EVAL_TOL: float = 1e-10

_DEFAULT_GRID: Dict[Command, Tuple[Tuple[float, ...], Tuple[float, ...]]] = {
    Command.EVAL: ((1.0,), (0.0,)),
    Command.VERIFY: ((0.4, 0.8), (0.0,)),
    Command.ORACLE: (ORACLE_MODULI, ORACLE_PHASES),
    Command.GAMMACHECK: ((), ()),
}

_DEFAULT_TOL: Dict[Command, float] = {
    Command.EVAL: EVAL_TOL,
    Command.VERIFY: DEFAULT_VERIFY_TOL,
    Command.ORACLE: ORACLE_TOL,
    Command.GAMMACHECK: SUITE_TOL,
}


@dataclass(frozen=True)
class RunConfig:
    """ 기본값까지 모두 채운 실행 설정 (보고서에 그대로 기록됨) """

    command: Command
    spec_path: Optional[str] = None
    identity: Optional[str] = None
    alpha: float = 0.0
    beta: float = 0.0
    lam: float = 0.0
    delta: float = 0.0
    base_path: Optional[str] = None
    moduli: Tuple[float, ...] = ()
    phases: Tuple[float, ...] = ()
    tol: float = EVAL_TOL
    seed: int = 0
    format: OutputFormat = OutputFormat.JSON
    out: Optional[str] = None
    method: Method = Method.CONTOUR
    count: int = 1000
    inject_fault: bool = False
    workers: int = DEFAULT_WORKERS
    verbose: bool = False
    quadrature: QuadratureOptions = field(default_factory=QuadratureOptions)

    def __post_init__(self):
        if not self.tol > 0:
            raise UsageError(f"tol 은 양수여야 합니다. -> {self.tol}")
        if self.command in (Command.EVAL, Command.VERIFY) and not (self.moduli and self.phases):
            raise UsageError("표본 격자가 비어 있습니다.")
        if any(not x > 0 for x in self.moduli):
            raise UsageError(f"모듈러스는 양수여야 합니다. -> {self.moduli}")
        if self.count < 0:
            raise UsageError(f"count 는 0 이상이어야 합니다. -> {self.count}")

    @property
    def grid(self) -> List[Tuple[float, float]]:
        """ (모듈러스, 위상) 을 모듈러스, 위상 순으로 정렬 """
        return sorted({(r, p) for r in self.moduli for p in self.phases})

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        for key, value in data.items():
            if isinstance(value, enum.Enum):
                data[key] = value.value
        return data


class ArgumentParser(argparse.ArgumentParser):
    """ 사용법 오류를 SystemExit(2) 대신 UsageError 로 알림 """

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _floats(text: str) -> Tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"쉼표로 구분된 실수가 아닙니다. -> {text!r}") from e


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--moduli", type=_floats, default=None, help="쉼표로 구분된 |z| 목록")
    parser.add_argument("--phases", type=_floats, default=None, help="쉼표로 구분된 arg z 목록")
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=[x.value for x in OutputFormat], default="json")
    parser.add_argument("--out", default=None, help="보고서 경로 (생략 시 표준출력)")
    parser.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    parser.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="foxh", description="Fox H-function 평가와 항등식 검증")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    p_eval = commands.add_parser("eval", help="JSON 명세의 H-function 값 계산")
    p_eval.add_argument("--spec", dest="spec_path", required=True)
    p_eval.add_argument("--method", choices=[x.value for x in Method], default="contour")
    _common(p_eval)

    p_verify = commands.add_parser("verify", help="항등식 양변 비교")
    p_verify.add_argument("--identity", required=True, choices=[x.value for x in IdentityId])
    p_verify.add_argument("--alpha", type=float, default=0.0)
    p_verify.add_argument("--beta", type=float, default=0.0)
    p_verify.add_argument("--lambda", dest="lam", type=float, default=0.0)
    p_verify.add_argument("--delta", type=float, default=0.0)
    p_verify.add_argument("--base", dest="base_path", default=None)
    _common(p_verify)

    p_oracle = commands.add_parser("oracle", help="경로 적분과 잔류 급수, 닫힌 형태 비교")
    _common(p_oracle)

    p_gamma = commands.add_parser("gammacheck", help="감마 항등식 시드 표본 검사")
    p_gamma.add_argument("--count", type=int, default=1000)
    p_gamma.add_argument("--inject-fault", dest="inject_fault", action="store_true")
    _common(p_gamma)
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """ UsageError: 알 수 없는 인자, 형식 오류, 불변조건 위반 """
    args = build_parser().parse_args(argv)
    command = Command(args.command)
    moduli, phases = _DEFAULT_GRID[command]
    options: Dict[str, Any] = {
        "command": command,
        "moduli": args.moduli if args.moduli is not None else moduli,
        "phases": args.phases if args.phases is not None else phases,
        "tol": args.tol if args.tol is not None else _DEFAULT_TOL[command],
        "seed": args.seed,
        "format": OutputFormat(args.format),
        "out": args.out,
        "workers": args.workers,
        "verbose": args.verbose,
    }
    for name in ("spec_path", "identity", "alpha", "beta", "lam", "delta", "base_path", "count", "inject_fault"):
        if hasattr(args, name):
            options[name] = getattr(args, name)
    if hasattr(args, "method"):
        options["method"] = Method(args.method)
    if command is Command.EVAL:
        options["quadrature"] = QuadratureOptions(rel_tol=options["tol"])
    return RunConfig(**options)
