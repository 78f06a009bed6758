import logging
import sys
from typing import Optional, Sequence

from ..exceptions import UsageError
from .config import Command, OutputFormat, RunConfig, build_parser, parse_config
from .commands import (
    COMMANDS,
    EXIT_USAGE,
    run_eval,
    run_verify,
    run_oracle,
    run_gammacheck,
)

__all__ = (
    "Command",
    "OutputFormat",
    "RunConfig",
    "build_parser",
    "parse_config",
    "run_eval",
    "run_verify",
    "run_oracle",
    "run_gammacheck",
    "main",
)

logger = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """ 종료 코드: 0 성공, 1 사용법/형식 오류, 2 수치 실패, 3 허용 영역 없음 """
    try:
        config = parse_config(argv)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logger.info("%s start", config.command.value)
    try:
        code = COMMANDS[config.command](config)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    logger.info("%s finished with exit code %d", config.command.value, code)
    return code
