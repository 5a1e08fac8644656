"""Base Pydantic models for supercode-mlsd."""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from ..constants import TrellisMode


class CodeSpec(BaseModel):
    """Which code pair to decode: a Reed-Muller pair or a parity-check file with a supercode prefix."""

    rm: Optional[tuple[int, int, int]] = Field(
        default=None, description="Reed-Muller orders (r, rbar, m): RM(r, m) inside RM(rbar, m)"
    )
    parity_check: Optional[Path] = Field(default=None, description="Parity-check matrix file of the code")
    prefix: Optional[int] = Field(
        default=None, ge=1, description="Number of leading rows of the parity-check file that define the supercode"
    )
    trellis_mode: TrellisMode = Field(default="auto", description="Build the code trellis explicitly or lazily")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def check_source(self) -> "CodeSpec":
        """Require exactly one code source, and a prefix with a parity-check file."""
        if (self.rm is None) == (self.parity_check is None):
            raise ValueError("Give exactly one of a Reed-Muller pair or a parity-check file")
        if self.parity_check is not None and self.prefix is None:
            raise ValueError("A parity-check file needs a supercode prefix")
        if self.rm is not None and self.prefix is not None:
            raise ValueError("A supercode prefix only applies to a parity-check file")
        return self

    @property
    def label(self) -> str:
        """Human-readable name, e.g. ``RM(2,6)/RM(4,6)``."""
        if self.rm is not None:
            r, rbar, m = self.rm
            return f"RM({r},{m})/RM({rbar},{m})"
        return f"{self.parity_check}[:{self.prefix}]"
