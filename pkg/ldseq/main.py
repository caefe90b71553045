"""
CLI Application Entry Point
ldseq - letter-duplicated subsequence toolkit
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from ldseq import __version__
from ldseq.cli import COMMAND_MODULES
from ldseq.config import get_settings
from ldseq.exceptions import LdseqError
from ldseq.log import setup_logging

logger = logging.getLogger("ldseq.main")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class CliParser(argparse.ArgumentParser):
    """Usage errors become a one-line diagnostic and exit code 2"""

    def error(self, message: str):
        self.exit(2, f"error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(
        prog="ldseq",
        description="Letter-duplicated subsequences: LLDS, Weighted-LDS, FT(3), LLDS+(3) and reductions",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="override LDSEQ_LOG_LEVEL")

    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


# ============================================================================
# DISPATCH
# ============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv and run one command.

    Exit codes: 0 success or feasible, 1 infeasible or unsatisfiable,
    2 any input, budget or internal error.
    """
    args = build_parser().parse_args(argv)

    try:
        settings = get_settings()
    except ValidationError as exc:
        print(f"error: invalid settings: {exc.errors()[0]['msg']}", file=sys.stderr)
        return 2
    if args.log_level:
        settings = settings.model_copy(update={"log_level": args.log_level})
    setup_logging(settings)

    try:
        return args.handler(args, settings)
    except LdseqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        print(f"error: malformed input: {exc.errors()[0]['msg']}", file=sys.stderr)
        return 2
    except Exception as exc:
        if settings.debug:
            logger.exception("unhandled error in %s", args.command)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
