"""Caching of built code pairs and trellises."""

from collections.abc import Awaitable, Callable
from functools import _CacheInfo
from typing import TYPE_CHECKING

from async_lru import alru_cache

from ..models import CodeSpec

if TYPE_CHECKING:
    from ..services.code_service import CodeSetup


# Global cached function with maxsize=16
@alru_cache(maxsize=16)
async def get_cached_code_setup(
    spec: CodeSpec,
    mtime: float,
    build_func: Callable[[CodeSpec], Awaitable["CodeSetup"]],
) -> "CodeSetup":
    """Get a built code setup using an async LRU cache.

    Uses the code spec and the parity-check file's modification time as the cache key,
    so an edited file is rebuilt.

    Args:
    ----
        spec: Code to build.
        mtime: Parity-check file modification time, 0.0 for Reed-Muller pairs.
        build_func: Async function building the setup.

    Returns:
    -------
        CodeSetup: Cached or freshly built setup.

    """
    return await build_func(spec)


def clear_global_cache() -> None:
    """Clear the global code setup cache."""
    get_cached_code_setup.cache_clear()


def get_global_cache_info() -> _CacheInfo:
    """Get statistics for the global cache.

    Returns
    -------
        _CacheInfo: Named tuple with cache statistics (hits, misses, maxsize, currsize).

    """
    return get_cached_code_setup.cache_info()
