"""Decode service - single-shot decoding of a received vector."""

import logging
from collections.abc import Sequence
from pathlib import Path

import anyio
import numpy as np

from ..config import DecoderSettings
from ..constants import DecoderName
from ..domain import BitMetrics, DecodeReport, brute_force_ml, pfsa_decode, uniform_cost_decode
from ..exceptions import ReceivedVectorError
from ..infrastructure import ExperimentFileRepository
from ..models import CodeSpec, DecodeResult
from .code_service import CodeService, CodeSetup

logger = logging.getLogger(__name__)


def run_decoder(
    setup: CodeSetup, decoder: DecoderName, metrics: BitMetrics, brute_force_max_k: int
) -> DecodeReport:
    """Decode ``metrics`` with the chosen decoder.

    The brute-force decoder counts one metric evaluation per codeword bit visited and
    reports no search counters.
    """
    if decoder == "tpmlsd":
        return pfsa_decode(setup.pair, setup.code_trellis, setup.super_trellis, metrics)
    if decoder == "ucs":
        return uniform_cost_decode(setup.pair.code, setup.code_trellis, metrics)
    result = brute_force_ml(setup.pair.code, metrics, brute_force_max_k)
    error_pattern = result.codeword ^ metrics.y
    error_pattern.setflags(write=False)
    evals = (1 << setup.k) * setup.n
    return DecodeReport(
        codeword=result.codeword,
        metric=result.metric,
        error_pattern=error_pattern,
        metric_evals_phase1=0,
        metric_evals_phase2=evals,
        metric_evals_total=evals,
        open_stack_peak=0,
        expansions=0,
        incumbent_updates=0,
    )


class DecodeService:
    """Service for decoding one received vector."""

    def __init__(self, code_service: CodeService, file_repo: ExperimentFileRepository, settings: DecoderSettings):
        """Initialize the decode service.

        Args:
        ----
            code_service: Source of built code setups.
            file_repo: Repository used to read received-vector files.
            settings: Enumeration guards.

        """
        self.code_service = code_service
        self.file_repo = file_repo
        self.settings = settings

    async def decode_once(
        self, spec: CodeSpec, received: Sequence[float], decoder: DecoderName = "tpmlsd"
    ) -> DecodeResult:
        """Decode raw received reals under the AWGN convention.

        Hard decisions are ``r_j < 0`` and reliabilities ``|r_j|``.

        Raises
        ------
            ReceivedVectorError: If the vector length is not the block length.

        """
        setup = await self.code_service.get_setup(spec)
        if len(received) != setup.n:
            raise ReceivedVectorError(f"Received {len(received)} values, the code has length {setup.n}")
        metrics = BitMetrics.from_received(np.asarray(received, dtype=np.float64))
        report = await anyio.to_thread.run_sync(
            run_decoder, setup, decoder, metrics, self.settings.brute_force_max_k
        )
        logger.info(
            "[DecodeService] %s with %s: metric %.6g, %d metric evaluations",
            setup.label,
            decoder,
            report.metric,
            report.metric_evals_total,
        )
        return DecodeResult.from_report(report, decoder)

    async def decode_file(self, spec: CodeSpec, received_path: Path, decoder: DecoderName = "tpmlsd") -> DecodeResult:
        """Decode the received vector stored in ``received_path``."""
        received = await self.file_repo.load_received(received_path)
        return await self.decode_once(spec, received, decoder)
