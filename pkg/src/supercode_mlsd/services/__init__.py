"""Services layer for supercode-mlsd (application orchestration)."""

from .code_service import CodeService, CodeSetup
from .decode_service import DecodeService
from .selftest_service import SelfTestService
from .simulation_service import SimulationService

__all__ = [
    "CodeService",
    "CodeSetup",
    "DecodeService",
    "SelfTestService",
    "SimulationService",
]
