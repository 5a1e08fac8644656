"""Test suite for the code setup cache."""

from unittest.mock import AsyncMock, MagicMock

import pytest

from supercode_mlsd.infrastructure.cache import clear_global_cache, get_cached_code_setup, get_global_cache_info
from supercode_mlsd.models import CodeSpec


class TestCodeSetupCache:
    """Test suite for get_cached_code_setup."""

    @pytest.fixture
    def spec(self) -> CodeSpec:
        """A Reed-Muller code spec."""
        return CodeSpec(rm=(1, 2, 4))

    @pytest.mark.anyio
    async def test_second_call_hits(self, spec: CodeSpec) -> None:
        """Test that an equal spec and mtime reuse the built setup."""
        setup = MagicMock()
        build = AsyncMock(return_value=setup)

        first = await get_cached_code_setup(spec, 0.0, build)
        second = await get_cached_code_setup(CodeSpec(rm=(1, 2, 4)), 0.0, build)

        assert first is setup
        assert second is setup
        build.assert_awaited_once_with(spec)
        info = get_global_cache_info()
        assert info.hits == 1
        assert info.misses == 1

    @pytest.mark.anyio
    async def test_mtime_change_rebuilds(self, spec: CodeSpec) -> None:
        """Test that a new modification time misses the cache."""
        build = AsyncMock(side_effect=[MagicMock(), MagicMock()])

        first = await get_cached_code_setup(spec, 1.0, build)
        second = await get_cached_code_setup(spec, 2.0, build)

        assert first is not second
        assert build.await_count == 2

    @pytest.mark.anyio
    async def test_distinct_modes_are_distinct_keys(self) -> None:
        """Test that the trellis mode is part of the key."""
        build = AsyncMock(side_effect=[MagicMock(), MagicMock()])

        await get_cached_code_setup(CodeSpec(rm=(1, 2, 4)), 0.0, build)
        await get_cached_code_setup(CodeSpec(rm=(1, 2, 4), trellis_mode="lazy"), 0.0, build)

        assert build.await_count == 2

    @pytest.mark.anyio
    async def test_clear(self, spec: CodeSpec) -> None:
        """Test that clearing the cache forces a rebuild."""
        build = AsyncMock(side_effect=[MagicMock(), MagicMock()])

        await get_cached_code_setup(spec, 0.0, build)
        clear_global_cache()
        await get_cached_code_setup(spec, 0.0, build)

        assert build.await_count == 2
        assert get_global_cache_info().currsize == 1
