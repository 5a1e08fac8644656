"""The ``decode`` command: decode one received vector and print the report as JSON."""

import argparse
from pathlib import Path

from ..config import get_config
from ..constants import EXIT_OK
from ..exceptions import InvalidCodeError
from ..infrastructure import ExperimentFileRepository
from ..services import CodeService, DecodeService
from .common import Subparsers, add_code_arguments, code_spec_from_args, emit


def create_decode_command(subparsers: Subparsers) -> None:
    """Register the ``decode`` command.

    Args:
    ----
        subparsers: Sub-command registry of the CLI parser.

    """
    settings = get_config()
    file_repo = ExperimentFileRepository()
    decode_service = DecodeService(CodeService(file_repo, settings), file_repo, settings)

    parser = subparsers.add_parser("decode", help="decode one received vector (one real per line)")
    add_code_arguments(parser)
    parser.add_argument("--received", type=Path, required=True, metavar="FILE", help="received reals, one per line")
    parser.add_argument("--decoder", choices=("tpmlsd", "ucs", "brute"), default="tpmlsd")
    parser.add_argument("--out", type=Path, metavar="FILE", help="write the report here instead of stdout")

    async def decode(args: argparse.Namespace) -> int:
        if args.rm is None and args.parity_check is None:
            raise InvalidCodeError("Give --rm or --parity-check")
        result = await decode_service.decode_file(code_spec_from_args(args), args.received, args.decoder)
        await emit(result.model_dump_json(indent=2) + "\n", args.out, file_repo)
        return EXIT_OK

    parser.set_defaults(handler=decode)
