"""The ``simulate`` command: Monte-Carlo sweeps written as CSV or JSON."""

import argparse
import csv
import io
from pathlib import Path

from pydantic import TypeAdapter

from ..config import get_config
from ..constants import EXIT_OK, PRESETS, SIM_ROW_FIELDS
from ..exceptions import InvalidCodeError
from ..infrastructure import ExperimentFileRepository
from ..models import SimConfig, SimRow
from ..services import CodeService, SimulationService
from .common import Subparsers, add_code_arguments, code_spec_from_args, emit, float_list


def rows_to_csv(rows: list[SimRow]) -> str:
    """Render rows with a header, columns in ``SIM_ROW_FIELDS`` order."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SIM_ROW_FIELDS)
    for row in rows:
        writer.writerow(row.csv_values())
    return buffer.getvalue()


def rows_to_json(rows: list[SimRow]) -> str:
    """Render rows as a JSON array."""
    return TypeAdapter(list[SimRow]).dump_json(rows, indent=2).decode() + "\n"


def sim_config_from_args(args: argparse.Namespace) -> SimConfig:
    """Merge a preset (if any) with explicit flags; explicit flags win."""
    rm_default = None
    snr = args.snr_db
    trials = args.trials
    if args.preset is not None:
        preset_rm, preset_snr, preset_trials = PRESETS[args.preset]
        rm_default = preset_rm
        snr = snr if snr is not None else list(preset_snr)
        trials = trials if trials is not None else preset_trials
    if args.rm is None and args.parity_check is None and rm_default is None:
        raise InvalidCodeError("Give --rm, --parity-check or --preset")
    if snr is None:
        raise InvalidCodeError("Give --snr-db or --preset")
    return SimConfig(
        code=code_spec_from_args(args, rm_default),
        snr_b_db_list=snr,
        trials_per_point=trials if trials is not None else 1000,
        base_seed=args.seed,
        decoder=args.decoder,
        output_format=args.format,
        all_zero_codeword=args.all_zero,
        sigma_override=args.sigma,
    )


def create_simulate_command(subparsers: Subparsers) -> None:
    """Register the ``simulate`` command.

    Args:
    ----
        subparsers: Sub-command registry of the CLI parser.

    """
    # Initialize services
    settings = get_config()
    file_repo = ExperimentFileRepository()
    simulation_service = SimulationService(CodeService(file_repo, settings), settings)

    parser = subparsers.add_parser("simulate", help="run a seeded Monte-Carlo decoding sweep")
    add_code_arguments(parser)
    parser.add_argument("--snr-db", type=float_list, metavar="LIST", help="comma-separated SNR_b points in dB")
    parser.add_argument("--trials", type=int, metavar="N", help="trials per SNR point (default: 1000)")
    parser.add_argument("--seed", type=int, default=0, metavar="S", help="base seed; trial i uses S + i")
    parser.add_argument("--decoder", choices=("tpmlsd", "ucs", "brute"), default="tpmlsd")
    parser.add_argument("--out", type=Path, metavar="FILE", help="write results here instead of stdout")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--preset", choices=sorted(PRESETS), help="named experiment supplying code, SNRs and trials")
    parser.add_argument("--all-zero", action="store_true", help="transmit the all-zero codeword")
    parser.add_argument("--sigma", type=float, metavar="SIGMA", help="noise standard deviation overriding the SNR")

    async def simulate(args: argparse.Namespace) -> int:
        cfg = sim_config_from_args(args)
        rows = await simulation_service.run_sweep(cfg)
        text = rows_to_csv(rows) if cfg.output_format == "csv" else rows_to_json(rows)
        await emit(text, args.out, file_repo)
        return EXIT_OK

    parser.set_defaults(handler=simulate)
