"""Argument helpers shared by the sub-commands."""

import argparse
import sys
from collections.abc import Callable
from pathlib import Path
from typing import TYPE_CHECKING, Optional

from ..infrastructure import ExperimentFileRepository
from ..models import CodeSpec

if TYPE_CHECKING:
    Subparsers = argparse._SubParsersAction[argparse.ArgumentParser]
else:
    Subparsers = argparse._SubParsersAction


def rm_triple(text: str) -> tuple[int, int, int]:
    """Parse ``r,rbar,m``."""
    parts = text.split(",")
    try:
        r, rbar, m = (int(p) for p in parts)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected r,rbar,m as three integers, got {text!r}") from e
    return r, rbar, m


def int_at_least(low: int) -> Callable[[str], int]:
    """Argument type accepting integers no smaller than ``low``."""

    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from e
        if value < low:
            raise argparse.ArgumentTypeError(f"must be at least {low}, got {value}")
        return value

    return parse


def float_list(text: str) -> list[float]:
    """Parse a comma-separated list of reals."""
    try:
        values = [float(p) for p in text.split(",") if p.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from e
    if not values:
        raise argparse.ArgumentTypeError("expected at least one value")
    return values


def add_code_arguments(parser: argparse.ArgumentParser) -> None:
    """Add ``--rm`` / ``--parity-check`` / ``--prefix`` / ``--trellis-mode``."""
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--rm", type=rm_triple, metavar="R,RBAR,M", help="Reed-Muller pair RM(r,m) in RM(rbar,m)")
    source.add_argument("--parity-check", type=Path, metavar="FILE", help="parity-check matrix file of the code")
    parser.add_argument("--prefix", type=int, metavar="T", help="leading rows of the file defining the supercode")
    parser.add_argument(
        "--trellis-mode",
        choices=("auto", "explicit", "lazy"),
        default="auto",
        help="build the code trellis explicitly, lazily, or by size (default: auto)",
    )


def code_spec_from_args(args: argparse.Namespace, rm_default: Optional[tuple[int, int, int]] = None) -> CodeSpec:
    """Build the code spec selected on the command line."""
    rm = args.rm if args.rm is not None or args.parity_check is not None else rm_default
    return CodeSpec(rm=rm, parity_check=args.parity_check, prefix=args.prefix, trellis_mode=args.trellis_mode)


async def emit(text: str, out: Optional[Path], file_repo: ExperimentFileRepository) -> None:
    """Write results to ``out`` or to stdout."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        await file_repo.write_text(out, text)
