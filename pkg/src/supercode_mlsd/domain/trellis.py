"""Expurgated syndrome trellises built from parity-check matrices.

Levels run from -1 (the root) to n-1 (the final node). A state is a partial syndrome
``sum_{j<=level} v_j h_j`` packed into an integer with parity check ``i`` at bit ``i``,
so projecting onto the first ``t`` checks is ``syndrome & ((1 << t) - 1)``.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Protocol, Union

import numpy as np
import numpy.typing as npt

from ..constants import (
    DEFAULT_EXPLICIT_STATE_LIMIT,
    DEFAULT_MAX_ENUMERATED_PATHS,
    DEFAULT_MAX_TRELLIS_STATES,
    TrellisMode,
)
from ..exceptions import EnumerationLimitError, InvalidCodeError, TrellisError, TrellisTooLargeError
from .gf2 import BinaryMatrix, BinaryVector, EchelonBasis, int_to_vector, null_space

Successors = tuple[tuple[int, int], ...]


class TrellisState(NamedTuple):
    """A trellis node: level in ``[-1, n-1]`` and a ``width``-bit syndrome."""

    level: int
    syndrome: int
    width: int

    def bits(self) -> BinaryVector:
        """Syndrome as a bit vector of length ``width``."""
        return int_to_vector(self.syndrome, self.width)


def beta_project(state: TrellisState, t: int) -> TrellisState:
    """Project a code-trellis state onto the supertrellis: keep the first ``t`` syndrome bits.

    Raises
    ------
        TrellisError: If ``t`` exceeds the syndrome width.

    """
    if not 0 <= t <= state.width:
        raise TrellisError(f"Cannot project a {state.width}-bit syndrome onto {t} components")
    return TrellisState(state.level, state.syndrome & ((1 << t) - 1), t)


class SearchTrellis(Protocol):
    """What a decoder needs from a trellis: its columns and the successors of a node."""

    @property
    def n(self) -> int:
        """Block length."""
        ...

    @property
    def num_checks(self) -> int:
        """Number of parity checks (syndrome width)."""
        ...

    @property
    def columns(self) -> tuple[int, ...]:
        """Columns ``h_0 .. h_{n-1}`` as integers."""
        ...

    @property
    def dimension(self) -> int:
        """Code dimension k; the trellis holds ``2**k`` paths."""
        ...

    def successors(self, level: int, syndrome: int) -> Successors:
        """``(label, next_syndrome)`` pairs leaving ``syndrome`` at ``level`` that stay on a codeword path."""
        ...


@dataclass(frozen=True)
class TrellisProfile:
    """Per-level sizes of the expurgated trellis of ``H``, derived from column ranks.

    ``states`` and ``forward_states`` are indexed by level + 1 (levels -1..n-1);
    ``branches[j]`` counts the branches labelled with code bit ``j``.
    """

    states: tuple[int, ...]
    forward_states: tuple[int, ...]
    branches: tuple[int, ...]

    @property
    def max_states(self) -> int:
        """Largest expurgated level."""
        return max(self.states)

    @property
    def max_forward_states(self) -> int:
        """Largest forward-reachable (unexpurgated) level."""
        return max(self.forward_states)

    @property
    def total_branches(self) -> int:
        """Branch count of the whole trellis."""
        return sum(self.branches)


def trellis_profile(H: BinaryMatrix) -> TrellisProfile:
    """Compute state and branch counts of the trellis of ``H`` without building it.

    With ``P_l`` the span of ``h_0..h_l`` and ``F_l`` the span of ``h_l..h_{n-1}``, level
    ``l`` holds ``|P_l ∩ F_{l+1}|`` states, and every state at level ``l-1`` has two
    outgoing branches exactly when ``h_l`` lies in ``F_{l+1}``.
    """
    columns = H.column_ints()
    n = len(columns)
    prefix = [0]
    basis = EchelonBasis()
    for col in columns:
        basis.add(col)
        prefix.append(len(basis))
    suffix = [0] * (n + 1)
    basis = EchelonBasis()
    for j in range(n - 1, -1, -1):
        basis.add(columns[j])
        suffix[j] = len(basis)
    total = suffix[0]
    states = tuple(1 << (prefix[lvl + 1] + suffix[lvl + 1] - total) for lvl in range(-1, n))
    forward = tuple(1 << prefix[lvl + 1] for lvl in range(-1, n))
    branches = tuple(states[j] * (2 if suffix[j] == suffix[j + 1] else 1) for j in range(n))
    return TrellisProfile(states=states, forward_states=forward, branches=branches)


class Trellis:
    """Explicit expurgated syndrome trellis.

    States per level are stored sorted by syndrome with dense indices; branches at
    position ``j`` (joining level ``j-1`` to level ``j``) are stored as index arrays so
    dynamic programming over them vectorizes.
    """

    def __init__(
        self,
        columns: tuple[int, ...],
        num_checks: int,
        dimension: int,
        states: list[tuple[int, ...]],
        branch_from: list[npt.NDArray[np.int64]],
        branch_to: list[npt.NDArray[np.int64]],
        branch_label: list[npt.NDArray[np.uint8]],
    ) -> None:
        """Assemble a trellis from per-level data; use :func:`build_trellis` instead."""
        self._columns = columns
        self._num_checks = num_checks
        self._dimension = dimension
        self._states = states
        self._index = [{s: i for i, s in enumerate(level)} for level in states]
        self._branch_from = branch_from
        self._branch_to = branch_to
        self._branch_label = branch_label
        for arr in (*branch_from, *branch_to, *branch_label):
            arr.setflags(write=False)
        self._adjacency: list[dict[int, Successors]] = []
        for j in range(len(columns)):
            adj: dict[int, list[tuple[int, int]]] = {}
            src, dst = states[j], states[j + 1]
            for a, b, x in zip(branch_from[j].tolist(), branch_to[j].tolist(), branch_label[j].tolist()):
                adj.setdefault(src[a], []).append((x, dst[b]))
            self._adjacency.append({s: tuple(sorted(v)) for s, v in adj.items()})

    @property
    def n(self) -> int:
        """Block length."""
        return len(self._columns)

    @property
    def num_checks(self) -> int:
        """Number of parity checks (syndrome width)."""
        return self._num_checks

    @property
    def columns(self) -> tuple[int, ...]:
        """Columns of the defining parity-check matrix as integers."""
        return self._columns

    @property
    def dimension(self) -> int:
        """Dimension of the code; the trellis holds ``2**dimension`` paths."""
        return self._dimension

    def states_at(self, level: int) -> tuple[int, ...]:
        """Sorted syndromes surviving at ``level``."""
        return self._states[level + 1]

    def num_states(self, level: int) -> int:
        """State count at ``level``."""
        return len(self._states[level + 1])

    def index_of(self, level: int, syndrome: int) -> int | None:
        """Dense index of a state at ``level``, or None if it is not in the trellis."""
        return self._index[level + 1].get(syndrome)

    def contains(self, state: TrellisState) -> bool:
        """True if ``state`` is a node of this trellis."""
        return state.width == self._num_checks and self.index_of(state.level, state.syndrome) is not None

    def branches_at(
        self, position: int
    ) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64], npt.NDArray[np.uint8]]:
        """``(from_index, to_index, label)`` arrays of the branches labelled with code bit ``position``."""
        return self._branch_from[position], self._branch_to[position], self._branch_label[position]

    @property
    def num_branches(self) -> int:
        """Branch count of the whole trellis."""
        return sum(len(labels) for labels in self._branch_label)

    def successors(self, level: int, syndrome: int) -> Successors:
        """``(label, next_syndrome)`` pairs leaving ``syndrome`` at ``level``."""
        return self._adjacency[level + 1].get(syndrome, ())

    def iter_branches(self) -> Iterator[tuple[int, int, int, int]]:
        """Yield ``(position, from_syndrome, label, to_syndrome)`` for every branch."""
        for j in range(self.n):
            src, dst = self._states[j], self._states[j + 1]
            froms, tos, labels = self.branches_at(j)
            for a, b, x in zip(froms.tolist(), tos.tolist(), labels.tolist()):
                yield j, src[a], x, dst[b]

    def dump_lines(self) -> list[str]:
        """One ``level from_syndrome label to_syndrome`` line per branch, syndromes as 0/1 strings."""
        width = self._num_checks

        def fmt(s: int) -> str:
            return "".join("1" if (s >> i) & 1 else "0" for i in range(width))

        return [f"{j} {fmt(a)} {x} {fmt(b)}" for j, a, x, b in self.iter_branches()]

    def __repr__(self) -> str:
        """Short representation."""
        return f"Trellis(n={self.n}, checks={self._num_checks}, k={self._dimension}, branches={self.num_branches})"


def build_trellis(H: BinaryMatrix, max_states: int = DEFAULT_MAX_TRELLIS_STATES) -> Trellis:
    """Build the expurgated syndrome trellis of ``H``.

    A forward pass collects the reachable partial syndromes of every level; a backward
    pass keeps only states and branches on some path ending in the zero state at level n-1.

    Raises
    ------
        InvalidCodeError: If ``H`` has no rows or no columns.
        TrellisTooLargeError: If a forward level exceeds ``max_states``.

    """
    if H.rows == 0 or H.cols == 0:
        raise InvalidCodeError(f"Cannot build a trellis from an empty {H.rows}x{H.cols} parity-check matrix")
    profile = trellis_profile(H)
    if profile.max_forward_states > max_states:
        level = profile.forward_states.index(profile.max_forward_states) - 1
        raise TrellisTooLargeError(
            f"Trellis level {level} has {profile.max_forward_states} forward-reachable states (limit {max_states}); "
            "the code's trellis is too large to build explicitly"
        )
    columns = H.column_ints()
    n = len(columns)

    forward: list[set[int]] = [{0}]
    for col in columns:
        prev = forward[-1]
        forward.append(prev | {s ^ col for s in prev})

    alive: list[set[int]] = [set() for _ in range(n + 1)]
    alive[n] = {0}
    for j in range(n - 1, -1, -1):
        col, nxt = columns[j], alive[j + 1]
        alive[j] = {s for s in forward[j] if s in nxt or (s ^ col) in nxt}

    states = [tuple(sorted(level)) for level in alive]
    index = [{s: i for i, s in enumerate(level)} for level in states]
    branch_from: list[npt.NDArray[np.int64]] = []
    branch_to: list[npt.NDArray[np.int64]] = []
    branch_label: list[npt.NDArray[np.uint8]] = []
    for j, col in enumerate(columns):
        src, dst = [], []
        labels = []
        for a, s in enumerate(states[j]):
            for x, target in ((0, s), (1, s ^ col)):
                b = index[j + 1].get(target)
                if b is not None:
                    src.append(a)
                    dst.append(b)
                    labels.append(x)
        branch_from.append(np.asarray(src, dtype=np.int64))
        branch_to.append(np.asarray(dst, dtype=np.int64))
        branch_label.append(np.asarray(labels, dtype=np.uint8))

    return Trellis(columns, H.rows, n - _column_rank(columns), states, branch_from, branch_to, branch_label)


def _column_rank(columns: tuple[int, ...]) -> int:
    basis = EchelonBasis()
    for col in columns:
        basis.add(col)
    return len(basis)


class LazyTrellis:
    """Code trellis expanded on demand from ``(state, h_j)`` arithmetic.

    A successor at level ``j`` survives expurgation iff its syndrome lies in the span of the
    remaining columns ``h_{j+1}..h_{n-1}``; that is tested against a precomputed basis of
    the annihilator of each suffix span, so no level is ever materialized.
    """

    def __init__(self, H: BinaryMatrix) -> None:
        """Precompute suffix annihilators of ``H``'s column spans."""
        if H.rows == 0 or H.cols == 0:
            raise InvalidCodeError(f"Cannot build a trellis from an empty {H.rows}x{H.cols} parity-check matrix")
        self._H = H
        self._columns = H.column_ints()
        self._dimension = H.cols - _column_rank(self._columns)
        # _annihilators[j]: vectors a with <a, h_i> = 0 for all i >= j
        dense = H.dense
        self._annihilators: list[tuple[int, ...]] = []
        for j in range(H.cols + 1):
            if j < H.cols:
                suffix = BinaryMatrix.from_rows(dense[:, j:].T.copy(), H.rows)
            else:
                suffix = BinaryMatrix.zeros(0, H.rows)
            self._annihilators.append(null_space(suffix).row_ints())

    @property
    def n(self) -> int:
        """Block length."""
        return len(self._columns)

    @property
    def num_checks(self) -> int:
        """Number of parity checks (syndrome width)."""
        return self._H.rows

    @property
    def columns(self) -> tuple[int, ...]:
        """Columns of the defining parity-check matrix as integers."""
        return self._columns

    @property
    def dimension(self) -> int:
        """Dimension of the code."""
        return self._dimension

    @cached_property
    def profile(self) -> TrellisProfile:
        """Closed-form state and branch counts."""
        return trellis_profile(self._H)

    def _completes(self, position: int, syndrome: int) -> bool:
        return all(not (a & syndrome).bit_count() & 1 for a in self._annihilators[position])

    def successors(self, level: int, syndrome: int) -> Successors:
        """``(label, next_syndrome)`` pairs leaving ``syndrome`` at ``level``."""
        position = level + 1
        col = self._columns[position]
        out = []
        for x, target in ((0, syndrome), (1, syndrome ^ col)):
            if self._completes(position + 1, target):
                out.append((x, target))
        return tuple(out)

    def __repr__(self) -> str:
        """Short representation."""
        return f"LazyTrellis(n={self.n}, checks={self.num_checks}, k={self._dimension})"


AnyTrellis = Union[Trellis, LazyTrellis]


def make_code_trellis(
    H: BinaryMatrix,
    mode: TrellisMode = "auto",
    max_states: int = DEFAULT_MAX_TRELLIS_STATES,
    explicit_limit: int = DEFAULT_EXPLICIT_STATE_LIMIT,
) -> AnyTrellis:
    """Build the code trellis explicitly or lazily.

    In ``auto`` mode the trellis is built explicitly when its forward profile stays within
    ``explicit_limit`` states per level, and expanded lazily otherwise.
    """
    if mode == "explicit":
        return build_trellis(H, max_states)
    if mode == "lazy":
        return LazyTrellis(H)
    if trellis_profile(H).max_forward_states <= min(explicit_limit, max_states):
        return build_trellis(H, max_states)
    return LazyTrellis(H)


def enumerate_paths(trellis: SearchTrellis, max_paths: int = DEFAULT_MAX_ENUMERATED_PATHS) -> list[BinaryVector]:
    """List every root-to-final label sequence, in lexicographic order.

    Raises
    ------
        EnumerationLimitError: If the trellis holds more than ``max_paths`` paths.

    """
    count = 1 << trellis.dimension
    if count > max_paths:
        raise EnumerationLimitError(f"Trellis holds 2^{trellis.dimension} paths, above the limit of {max_paths}")
    n = trellis.n
    paths: list[BinaryVector] = []
    stack: list[tuple[int, int, tuple[int, ...]]] = [(-1, 0, ())]
    while stack:
        level, syndrome, labels = stack.pop()
        if level == n - 1:
            if syndrome != 0:
                raise TrellisError(f"Path {labels} ends in nonzero state {syndrome}")
            path = np.asarray(labels, dtype=np.uint8)
            path.setflags(write=False)
            paths.append(path)
            continue
        for x, target in reversed(trellis.successors(level, syndrome)):
            stack.append((level + 1, target, (*labels, x)))
    if len(paths) != count:
        raise TrellisError(f"Enumerated {len(paths)} paths, expected 2^{trellis.dimension}")
    return paths
