"""Command-line entry point: argument parsing, logging setup and exit codes."""

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Optional

import anyio
from pydantic import ValidationError

from .config import get_config
from .constants import EXIT_INTERNAL_ERROR, EXIT_USAGE_ERROR
from .exceptions import InputError, SupercodeDecoderError

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Create the parser with every sub-command registered."""
    # Import commands at runtime (not at module import time)
    from .commands import register_all_commands

    parser = argparse.ArgumentParser(
        prog="supercode-mlsd",
        description="Two-phase maximum-likelihood soft-decision decoding with supercode trellises.",
    )
    parser.add_argument(
        "--log-level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        help="logging level on stderr (default: from MLSD_LOG_LEVEL, else WARNING)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    register_all_commands(subparsers)
    return parser


def configure_logging(level: str) -> None:
    """Send log records to stderr; stdout carries only results."""
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, run the selected command and return its exit code."""
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        configure_logging(args.log_level or get_config().log_level)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    try:
        code: int = anyio.run(args.handler, args)
    except Exception as e:
        return exit_code_for(_unwrap_group(e))
    return code


def _unwrap_group(exc: BaseException) -> BaseException:
    """Return the sole exception of (nested) single-member exception groups from task groups."""
    inner = getattr(exc, "exceptions", None)
    while isinstance(inner, tuple) and len(inner) == 1:
        exc = inner[0]
        inner = getattr(exc, "exceptions", None)
    return exc


def exit_code_for(exc: BaseException) -> int:
    """Report ``exc`` on stderr and map it to an exit code."""
    if isinstance(exc, (InputError, ValidationError)):
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    if isinstance(exc, SupercodeDecoderError):
        logger.error("Internal error: %s", exc)
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    logger.error("Unexpected failure", exc_info=exc)
    print(f"internal error: {exc}", file=sys.stderr)
    return EXIT_INTERNAL_ERROR


def main() -> None:
    """Run main entrypoint."""
    sys.exit(run())


__all__ = ["build_parser", "exit_code_for", "main", "run"]
