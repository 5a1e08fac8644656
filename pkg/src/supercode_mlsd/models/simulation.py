"""Simulation sweep configuration and result rows."""

from typing import Optional

from pydantic import BaseModel, Field

from ..constants import SIM_ROW_FIELDS, DecoderName, OutputFormat
from .base import CodeSpec


class SimConfig(BaseModel):
    """One Monte-Carlo sweep over a list of SNR points."""

    code: CodeSpec = Field(description="Code pair to simulate")
    snr_b_db_list: list[float] = Field(min_length=1, description="SNR per information bit points, in dB")
    trials_per_point: int = Field(ge=1, description="Decodes per SNR point")
    base_seed: int = Field(default=0, description="Trial i uses seed base_seed + i")
    decoder: DecoderName = Field(default="tpmlsd", description="Decoder to run")
    output_format: OutputFormat = Field(default="csv", description="Result format")
    all_zero_codeword: bool = Field(default=False, description="Transmit the all-zero codeword instead of random ones")
    sigma_override: Optional[float] = Field(
        default=None, ge=0.0, description="Noise standard deviation to use instead of the SNR-derived one"
    )


class SimRow(BaseModel):
    """Aggregated statistics of one SNR point."""

    snr_b_db: float
    trials: int = Field(ge=1)
    mean_metric_evals_total: float = Field(ge=0.0)
    mean_metric_evals_phase1: float = Field(ge=0.0)
    mean_metric_evals_phase2: float = Field(ge=0.0)
    max_metric_evals_total: int = Field(ge=0)
    mean_expansions: float = Field(ge=0.0)
    mean_open_stack_peak: float = Field(ge=0.0)
    bit_errors: int = Field(ge=0)
    bits_sent: int = Field(ge=1)
    ber: float = Field(ge=0.0, le=1.0)
    word_errors: int = Field(ge=0)
    wer: float = Field(ge=0.0, le=1.0)
    wall_time_seconds: float = Field(ge=0.0)

    def csv_values(self) -> list[str]:
        """Field values as strings, in CSV column order."""
        return [str(getattr(self, name)) for name in SIM_ROW_FIELDS]
