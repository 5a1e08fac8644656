"""The ``trellis-stats`` command: per-level trellis sizes, optionally a branch dump."""

import argparse

from ..config import get_config
from ..constants import EXIT_OK
from ..exceptions import InvalidCodeError
from ..infrastructure import ExperimentFileRepository
from ..services import CodeService
from .common import Subparsers, add_code_arguments, code_spec_from_args, emit


def create_trellis_stats_command(subparsers: Subparsers) -> None:
    """Register the ``trellis-stats`` command.

    Args:
    ----
        subparsers: Sub-command registry of the CLI parser.

    """
    settings = get_config()
    file_repo = ExperimentFileRepository()
    code_service = CodeService(file_repo, settings)

    parser = subparsers.add_parser("trellis-stats", help="print per-level state and branch counts as JSON")
    add_code_arguments(parser)
    parser.add_argument(
        "--dump",
        choices=("code", "super"),
        help="print one 'level from label to' line per branch of that trellis instead",
    )

    async def trellis_stats(args: argparse.Namespace) -> int:
        if args.rm is None and args.parity_check is None:
            raise InvalidCodeError("Give --rm or --parity-check")
        spec = code_spec_from_args(args)
        if args.dump is not None:
            lines = await code_service.dump_trellis(spec, args.dump)
            await emit("\n".join(lines) + "\n", None, file_repo)
        else:
            stats = await code_service.trellis_stats(spec)
            await emit(stats.model_dump_json(indent=2) + "\n", None, file_repo)
        return EXIT_OK

    parser.set_defaults(handler=trellis_stats)
