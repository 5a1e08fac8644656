"""Infrastructure layer for supercode-mlsd."""

from .cache import clear_global_cache, get_cached_code_setup, get_global_cache_info
from .file_system import ExperimentFileRepository

__all__ = [
    "ExperimentFileRepository",
    "get_cached_code_setup",
    "clear_global_cache",
    "get_global_cache_info",
]
