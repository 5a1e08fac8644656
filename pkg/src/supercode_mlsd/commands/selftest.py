"""The ``selftest`` command."""

import argparse

from ..config import get_config
from ..constants import EXIT_INTERNAL_ERROR, EXIT_OK
from ..infrastructure import ExperimentFileRepository
from ..services import SelfTestService
from ..services.selftest_service import MIN_N
from .common import Subparsers, emit, int_at_least


def create_selftest_command(subparsers: Subparsers) -> None:
    """Register the ``selftest`` command.

    Args:
    ----
        subparsers: Sub-command registry of the CLI parser.

    """
    file_repo = ExperimentFileRepository()
    selftest_service = SelfTestService(get_config())

    parser = subparsers.add_parser("selftest", help="run the oracle-equivalence and invariant suite")
    parser.add_argument("--seed", type=int, default=0, metavar="S")
    parser.add_argument("--pairs", type=int_at_least(1), default=20, metavar="N", help="random code pairs to check")
    parser.add_argument("--max-n", type=int_at_least(MIN_N), default=12, metavar="N", help="largest block length drawn")

    async def selftest(args: argparse.Namespace) -> int:
        result = await selftest_service.selftest(args.seed, args.pairs, args.max_n)
        await emit(result.model_dump_json(indent=2) + "\n", None, file_repo)
        return EXIT_OK if result.passed else EXIT_INTERNAL_ERROR

    parser.set_defaults(handler=selftest)
