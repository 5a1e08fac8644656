"""Pydantic models for supercode-mlsd."""

from .base import CodeSpec
from .responses import DecodeResult, LevelStats, SelfTestCheck, SelfTestResult, TrellisStatsResult
from .simulation import SimConfig, SimRow

__all__ = [
    # Base models
    "CodeSpec",
    # Simulation models
    "SimConfig",
    "SimRow",
    # Response models
    "DecodeResult",
    "LevelStats",
    "TrellisStatsResult",
    "SelfTestCheck",
    "SelfTestResult",
]
