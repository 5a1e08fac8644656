"""Simulation service - seeded Monte-Carlo sweeps over SNR points."""

import logging
import math
import time
from dataclasses import dataclass

import anyio
import numpy as np
from aioresult import ResultCapture

from ..config import DecoderSettings
from ..constants import REFERENCE_RMLD_METRICS, REFERENCE_TPMLSD_METRICS, DecoderName
from ..domain import snr_b_to_sigma, transmit
from ..domain.channel import random_message_bits
from ..domain.gf2 import BinaryVector, null_space
from ..models import SimConfig, SimRow
from .code_service import CodeService, CodeSetup
from .decode_service import run_decoder

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrialOutcome:
    """Counters and errors of one decode."""

    index: int
    metric: float
    metric_evals_total: int
    metric_evals_phase1: int
    metric_evals_phase2: int
    expansions: int
    open_stack_peak: int
    bit_errors: int


def transmitted_codeword(setup: CodeSetup, seed: int, all_zero: bool) -> BinaryVector:
    """The codeword sent in the trial with ``seed``: all-zero, or a random message times ``G``."""
    if all_zero:
        return np.zeros(setup.n, dtype=np.uint8)
    G = setup.pair.code.G if setup.pair.code.G is not None else null_space(setup.pair.code.H)
    message = random_message_bits(seed, setup.k).astype(np.int64)
    return ((message @ G.dense.astype(np.int64)) & 1).astype(np.uint8)


def run_trials(
    setup: CodeSetup,
    decoder: DecoderName,
    sigma: float,
    snr_b_db: float,
    base_seed: int,
    indices: range,
    all_zero: bool,
    brute_force_max_k: int,
) -> list[TrialOutcome]:
    """Run the trials ``indices`` of one SNR point; trial ``i`` uses seed ``base_seed + i``."""
    outcomes = []
    for i in indices:
        seed = base_seed + i
        sent = transmitted_codeword(setup, seed, all_zero)
        received = transmit(sent, sigma, seed, snr_b_db)
        report = run_decoder(setup, decoder, received.metrics(), brute_force_max_k)
        outcomes.append(
            TrialOutcome(
                index=i,
                metric=report.metric,
                metric_evals_total=report.metric_evals_total,
                metric_evals_phase1=report.metric_evals_phase1,
                metric_evals_phase2=report.metric_evals_phase2,
                expansions=report.expansions,
                open_stack_peak=report.open_stack_peak,
                bit_errors=int(np.count_nonzero(report.codeword != sent)),
            )
        )
    return outcomes


def summarize(snr_b_db: float, n: int, outcomes: list[TrialOutcome], wall_time_seconds: float) -> SimRow:
    """Aggregate trial outcomes into one row; means use compensated summation."""
    trials = len(outcomes)

    def mean(values: list[int]) -> float:
        return math.fsum(values) / trials

    bit_errors = sum(o.bit_errors for o in outcomes)
    word_errors = sum(1 for o in outcomes if o.bit_errors)
    bits_sent = trials * n
    return SimRow(
        snr_b_db=snr_b_db,
        trials=trials,
        mean_metric_evals_total=mean([o.metric_evals_total for o in outcomes]),
        mean_metric_evals_phase1=mean([o.metric_evals_phase1 for o in outcomes]),
        mean_metric_evals_phase2=mean([o.metric_evals_phase2 for o in outcomes]),
        max_metric_evals_total=max(o.metric_evals_total for o in outcomes),
        mean_expansions=mean([o.expansions for o in outcomes]),
        mean_open_stack_peak=mean([o.open_stack_peak for o in outcomes]),
        bit_errors=bit_errors,
        bits_sent=bits_sent,
        ber=bit_errors / bits_sent,
        word_errors=word_errors,
        wer=word_errors / trials,
        wall_time_seconds=wall_time_seconds,
    )


class SimulationService:
    """Service for Monte-Carlo decoding sweeps."""

    def __init__(self, code_service: CodeService, settings: DecoderSettings):
        """Initialize the simulation service.

        Args:
        ----
            code_service: Source of built code setups.
            settings: Worker count, chunk size and enumeration guards.

        """
        self.code_service = code_service
        self.settings = settings

    async def run_sweep(self, cfg: SimConfig) -> list[SimRow]:
        """Run ``cfg.trials_per_point`` seeded decodes at every SNR point.

        Trials are split into chunks run in worker threads; results are merged by trial
        index, so the rows do not depend on scheduling.

        Returns
        -------
            list[SimRow]: One row per SNR point, in input order.

        """
        setup = await self.code_service.get_setup(cfg.code)
        rows = []
        for snr_b_db in cfg.snr_b_db_list:
            sigma = cfg.sigma_override
            if sigma is None:
                sigma = snr_b_to_sigma(snr_b_db, setup.n, setup.k)
            start = time.perf_counter()
            outcomes = await self.run_point(setup, cfg, sigma, snr_b_db)
            row = summarize(snr_b_db, setup.n, outcomes, time.perf_counter() - start)
            self._log_row(setup, cfg, row)
            rows.append(row)
        return rows

    async def run_point(self, setup: CodeSetup, cfg: SimConfig, sigma: float, snr_b_db: float) -> list[TrialOutcome]:
        """Run every trial of one SNR point, ordered by trial index."""
        chunk = self.settings.trial_chunk_size
        limiter = anyio.CapacityLimiter(self.settings.workers)
        chunks = [
            range(start, min(start + chunk, cfg.trials_per_point)) for start in range(0, cfg.trials_per_point, chunk)
        ]

        async def run_chunk(indices: range) -> list[TrialOutcome]:
            return await anyio.to_thread.run_sync(
                run_trials,
                setup,
                cfg.decoder,
                sigma,
                snr_b_db,
                cfg.base_seed,
                indices,
                cfg.all_zero_codeword,
                self.settings.brute_force_max_k,
                limiter=limiter,
            )

        async with anyio.create_task_group() as tg:
            captures = [ResultCapture.start_soon(tg, run_chunk, indices) for indices in chunks]
        outcomes = [o for c in captures for o in c.result()]
        outcomes.sort(key=lambda o: o.index)
        return outcomes

    @staticmethod
    def _log_row(setup: CodeSetup, cfg: SimConfig, row: SimRow) -> None:
        logger.info(
            "[SimulationService] %s %.2f dB: %d trials, mean metric evaluations %.1f (%.3f of RMLD's %d), BER %.3g",
            setup.label,
            row.snr_b_db,
            row.trials,
            row.mean_metric_evals_total,
            row.mean_metric_evals_total / REFERENCE_RMLD_METRICS,
            REFERENCE_RMLD_METRICS,
            row.ber,
        )
        reference = REFERENCE_TPMLSD_METRICS.get(row.snr_b_db)
        if cfg.code.rm == (2, 4, 6) and cfg.decoder == "tpmlsd" and reference is not None:
            logger.info("[SimulationService] Published average at %.2f dB: %d", row.snr_b_db, reference)
