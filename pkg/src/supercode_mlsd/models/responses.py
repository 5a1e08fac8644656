"""Response models for command outputs."""

from typing import Optional

from pydantic import BaseModel, Field, computed_field

from ..constants import DecoderName
from ..domain import DecodeReport
from ..utils import bits_to_string


class DecodeResult(BaseModel):
    """A decode report rendered for JSON output."""

    decoder: DecoderName = Field(description="Decoder that produced the decision")
    codeword: str = Field(description="Decided codeword as a 0/1 string")
    metric: float = Field(description="Path metric of the decided codeword")
    error_pattern: str = Field(description="Codeword XOR hard decisions, as a 0/1 string")
    metric_evals_phase1: int
    metric_evals_phase2: int
    metric_evals_total: int
    open_stack_peak: int
    expansions: int
    incumbent_updates: int

    @classmethod
    def from_report(cls, report: DecodeReport, decoder: DecoderName) -> "DecodeResult":
        """Render a domain report."""
        return cls(
            decoder=decoder,
            codeword=bits_to_string(report.codeword),
            metric=report.metric,
            error_pattern=bits_to_string(report.error_pattern),
            metric_evals_phase1=report.metric_evals_phase1,
            metric_evals_phase2=report.metric_evals_phase2,
            metric_evals_total=report.metric_evals_total,
            open_stack_peak=report.open_stack_peak,
            expansions=report.expansions,
            incumbent_updates=report.incumbent_updates,
        )


class LevelStats(BaseModel):
    """State and branch counts of one trellis level."""

    level: int
    code_states: int
    super_states: int
    code_branches: Optional[int] = Field(default=None, description="Branches entering this level; None at level -1")
    super_branches: Optional[int] = None


class TrellisStatsResult(BaseModel):
    """Per-level sizes of the code trellis and the supertrellis."""

    code: str
    n: int
    k: int
    k_super: int
    code_trellis_mode: str = Field(description="'explicit' or 'lazy'")
    levels: list[LevelStats]
    code_max_states: int
    super_max_states: int
    code_total_branches: int
    super_total_branches: int
    code_max_forward_states: int


class SelfTestCheck(BaseModel):
    """Outcome of one self-test check."""

    name: str
    passed: bool
    detail: str = ""


class SelfTestResult(BaseModel):
    """All self-test checks."""

    seed: int
    checks: list[SelfTestCheck]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """True if every check passed."""
        return all(check.passed for check in self.checks)
