"""CLI sub-commands for supercode-mlsd."""

from .common import Subparsers
from .decode import create_decode_command
from .selftest import create_selftest_command
from .simulate import create_simulate_command
from .trellis_stats import create_trellis_stats_command

__all__ = [
    "create_simulate_command",
    "create_decode_command",
    "create_trellis_stats_command",
    "create_selftest_command",
]


def register_all_commands(subparsers: Subparsers) -> None:
    """Register all sub-commands with the CLI parser.

    Args:
    ----
        subparsers: Sub-command registry of the CLI parser.

    """
    create_simulate_command(subparsers)
    create_decode_command(subparsers)
    create_trellis_stats_command(subparsers)
    create_selftest_command(subparsers)
