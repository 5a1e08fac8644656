"""Code service - builds code pairs and their trellises, and reports trellis sizes."""

import logging
from dataclasses import dataclass

import anyio

from ..config import DecoderSettings
from ..domain import (
    AnyTrellis,
    CodePair,
    LazyTrellis,
    Trellis,
    build_trellis,
    make_code_trellis,
    pair_from_parity_check,
    rm_code_pair,
    trellis_profile,
)
from ..exceptions import InvalidCodeError
from ..infrastructure import ExperimentFileRepository, get_cached_code_setup
from ..models import CodeSpec, LevelStats, TrellisStatsResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CodeSetup:
    """A code pair with its code trellis and explicit supertrellis, shared read-only by decoders."""

    label: str
    pair: CodePair
    code_trellis: AnyTrellis
    super_trellis: Trellis

    @property
    def n(self) -> int:
        """Block length."""
        return self.pair.n

    @property
    def k(self) -> int:
        """Code dimension."""
        return self.pair.code.k


def build_setup(label: str, pair: CodePair, settings: DecoderSettings, spec: CodeSpec) -> CodeSetup:
    """Build both trellises of ``pair`` under the configured size guards."""
    super_trellis = build_trellis(pair.supercode.H, settings.max_trellis_states)
    code_trellis = make_code_trellis(
        pair.code.H, spec.trellis_mode, settings.max_trellis_states, settings.explicit_state_limit
    )
    return CodeSetup(label=label, pair=pair, code_trellis=code_trellis, super_trellis=super_trellis)


class CodeService:
    """Service for building code setups and reporting trellis statistics."""

    def __init__(self, file_repo: ExperimentFileRepository, settings: DecoderSettings):
        """Initialize the code service.

        Args:
        ----
            file_repo: Repository used to read parity-check files.
            settings: Size guards and trellis limits.

        """
        self.file_repo = file_repo
        self.settings = settings

    async def get_setup(self, spec: CodeSpec) -> CodeSetup:
        """Return the (cached) setup of ``spec``.

        Raises
        ------
            InvalidCodeError: If the code cannot be built.
            TrellisTooLargeError: If a trellis exceeds the state guard.
            ExperimentFileError: If the parity-check file cannot be read.

        """
        mtime = self.file_repo.get_mtime(spec.parity_check) if spec.parity_check is not None else 0.0
        return await get_cached_code_setup(spec, mtime, self._build_setup)

    async def load_pair(self, spec: CodeSpec) -> CodePair:
        """Build only the code pair of ``spec``."""
        if spec.rm is not None:
            r, rbar, m = spec.rm
            return rm_code_pair(r, rbar, m)
        if spec.parity_check is None or spec.prefix is None:
            raise InvalidCodeError("A parity-check file and a supercode prefix are required")
        H = await self.file_repo.load_parity_check(spec.parity_check)
        return pair_from_parity_check(H, spec.prefix)

    async def _build_setup(self, spec: CodeSpec) -> CodeSetup:
        pair = await self.load_pair(spec)
        logger.info(
            "[CodeService] Building trellises for %s (n=%d, k=%d, mode=%s)",
            spec.label,
            pair.n,
            pair.code.k,
            spec.trellis_mode,
        )
        setup = await anyio.to_thread.run_sync(build_setup, spec.label, pair, self.settings, spec)
        logger.info("[CodeService] %s: %r, %r", spec.label, setup.super_trellis, setup.code_trellis)
        return setup

    async def trellis_stats(self, spec: CodeSpec) -> TrellisStatsResult:
        """Per-level state and branch counts of the code trellis and the supertrellis.

        Counts come from the closed-form profile, so they are available even when the code
        trellis is only expanded lazily.
        """
        setup = await self.get_setup(spec)
        code_profile = trellis_profile(setup.pair.code.H)
        super_profile = trellis_profile(setup.pair.supercode.H)
        levels = [
            LevelStats(
                level=level,
                code_states=code_profile.states[level + 1],
                super_states=super_profile.states[level + 1],
                code_branches=code_profile.branches[level] if level >= 0 else None,
                super_branches=super_profile.branches[level] if level >= 0 else None,
            )
            for level in range(-1, setup.n)
        ]
        return TrellisStatsResult(
            code=setup.label,
            n=setup.n,
            k=setup.k,
            k_super=setup.pair.supercode.k,
            code_trellis_mode="lazy" if isinstance(setup.code_trellis, LazyTrellis) else "explicit",
            levels=levels,
            code_max_states=code_profile.max_states,
            super_max_states=super_profile.max_states,
            code_total_branches=code_profile.total_branches,
            super_total_branches=super_profile.total_branches,
            code_max_forward_states=code_profile.max_forward_states,
        )

    async def dump_trellis(self, spec: CodeSpec, which: str) -> list[str]:
        """Branch lines of the supertrellis (``which="super"``) or the code trellis (``"code"``).

        The code trellis is built explicitly for the dump, subject to the state guard.
        """
        setup = await self.get_setup(spec)
        if which == "super":
            return setup.super_trellis.dump_lines()
        trellis = setup.code_trellis
        if not isinstance(trellis, Trellis):
            trellis = await anyio.to_thread.run_sync(build_trellis, setup.pair.code.H, self.settings.max_trellis_states)
        return trellis.dump_lines()
