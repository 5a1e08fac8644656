"""Brute-force references and invariant checks for the two-phase decoder."""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..constants import COST_TABLE_ATOL, DEFAULT_BRUTE_FORCE_MAX_K, DEFAULT_EXHAUSTIVE_MAX_K, LEMMA_SLACK, METRIC_RTOL
from ..exceptions import DimensionMismatchError, EnumerationLimitError
from .channel import BitMetrics, path_metric
from .codes import CodePair, LinearCode
from .gf2 import BinaryVector, null_space
from .observer import SearchObserver
from .phase1 import CostToGoTable
from .phase2 import (
    DecodeReport,
    SearchPath,
    build_report,
    check_codeword,
    check_trellis_matches,
    priority_first_search,
    zero_heuristic,
)
from .trellis import SearchTrellis, Trellis, enumerate_paths

_CHUNK = 1 << 14


class BruteForceResult(NamedTuple):
    """Exhaustive ML decision."""

    codeword: BinaryVector
    metric: float
    num_minimizers: int


def brute_force_ml(code: LinearCode, m: BitMetrics, max_k: int = DEFAULT_BRUTE_FORCE_MAX_K) -> BruteForceResult:
    """Enumerate all ``2**k`` codewords and return a least-metric one.

    Messages are visited in Gray-code order; the first minimizer met is returned. Codewords
    whose metric is within relative ``1e-9`` of the minimum count as minimizers.

    Raises
    ------
        EnumerationLimitError: If ``k`` exceeds ``max_k``.
        DimensionMismatchError: If ``m`` has the wrong length.

    """
    if code.k > max_k:
        raise EnumerationLimitError(f"Brute force over 2^{code.k} codewords exceeds the limit of 2^{max_k}")
    G = (code.G if code.G is not None else null_space(code.H)).dense.astype(np.int64)
    if m.n != code.n:
        raise DimensionMismatchError(f"Metrics of length {m.n} for a code of length {code.n}")
    total = 1 << code.k
    y = m.y.astype(np.int64)
    shifts = np.arange(code.k, dtype=np.int64)

    metrics = np.empty(total, dtype=np.float64)
    for start in range(0, total, _CHUNK):
        index = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        gray = index ^ (index >> 1)
        messages = (gray[:, None] >> shifts[None, :]) & 1
        words = (messages @ G) & 1
        metrics[start : start + index.size] = (words != y).astype(np.float64) @ m.weights

    best = int(np.argmin(metrics))
    lowest = float(metrics[best])
    ties = int(np.count_nonzero(metrics <= lowest + METRIC_RTOL * max(1.0, abs(lowest))))
    gray_best = best ^ (best >> 1)
    message = ((gray_best >> shifts) & 1).astype(np.int64)
    codeword = ((message @ G) & 1).astype(np.uint8)
    codeword.setflags(write=False)
    return BruteForceResult(codeword, path_metric(codeword, m), ties)


def uniform_cost_decode(
    code: LinearCode, t: SearchTrellis, m: BitMetrics, observer: SearchObserver | None = None
) -> DecodeReport:
    """ML decoding by priority-first search with ``h = 0``; no phase 1.

    Raises
    ------
        InvalidCodeError: If ``t`` was not built from ``code.H``.
        DimensionMismatchError: If ``m`` has the wrong length.

    """
    check_trellis_matches(t, code.H.column_ints(), code.H.rows, "code")
    outcome = priority_first_search(t, m, zero_heuristic, observer)
    report = build_report(outcome, m, phase1_evals=0)
    check_codeword(code.H.column_ints(), report.codeword)
    return report


def exhaustive_backward_costs(
    t_bar: Trellis, m: BitMetrics, max_k: int = DEFAULT_EXHAUSTIVE_MAX_K
) -> CostToGoTable:
    """Cost-to-go table from every backward path of ``t_bar`` instead of dynamic programming.

    Raises
    ------
        EnumerationLimitError: If the trellis dimension exceeds ``max_k``.

    """
    if t_bar.dimension > max_k:
        raise EnumerationLimitError(f"Exhaustive cost table over 2^{t_bar.dimension} paths exceeds 2^{max_k}")
    n = t_bar.n
    if m.n != n:
        raise DimensionMismatchError(f"Metrics of length {m.n} for a trellis of length {n}")
    values = [np.full(t_bar.num_states(level), np.inf) for level in range(-1, n)]
    columns = t_bar.columns
    evals = 0
    for path in enumerate_paths(t_bar, max_paths=1 << max_k):
        bit_metrics = np.where(path != m.y, m.weights, 0.0)
        evals += n
        # suffix[j] covers labels j..n-1, accumulated from the final level backwards
        suffix = np.zeros(n + 1)
        suffix[:n] = np.cumsum(bit_metrics[::-1])[::-1]
        syndrome = 0
        for level in range(-1, n):
            if level >= 0 and path[level]:
                syndrome ^= columns[level]
            idx = t_bar.index_of(level, syndrome)
            slot = values[level + 1]
            slot[idx] = min(slot[idx], suffix[level + 1])
    for arr in values:
        arr.setflags(write=False)
    return CostToGoTable(trellis=t_bar, values=tuple(values), metric_evals=evals)


def cost_tables_match(a: CostToGoTable, b: CostToGoTable, atol: float = COST_TABLE_ATOL) -> bool:
    """True if both tables hold the same values within ``atol`` on every state."""
    return len(a.values) == len(b.values) and all(
        x.shape == y.shape and bool(np.allclose(x, y, rtol=0.0, atol=atol)) for x, y in zip(a.values, b.values)
    )


def metrics_agree(a: float, b: float, rtol: float = METRIC_RTOL) -> bool:
    """Metric equality within relative ``rtol`` (absolute near zero)."""
    return abs(a - b) <= rtol * max(1.0, abs(a), abs(b))


def homomorphism_violations(code_trellis: Trellis, super_columns: tuple[int, ...], t: int) -> int:
    """Count code-trellis branches whose projection is not a supertrellis step.

    For every branch ``(s, x, s')`` at position ``j`` the projected states must satisfy
    ``beta(s') = beta(s) + x * hbar_j``.
    """
    mask = (1 << t) - 1
    return sum(
        1
        for j, src, x, dst in code_trellis.iter_branches()
        if (dst & mask) != ((src & mask) ^ (super_columns[j] if x else 0))
    )


def projection_violations(code_trellis: Trellis, super_trellis: Trellis) -> int:
    """Count code-trellis states whose projection is missing from the supertrellis at the same level."""
    mask = (1 << super_trellis.num_checks) - 1
    return sum(
        1
        for level in range(-1, code_trellis.n)
        for s in code_trellis.states_at(level)
        if super_trellis.index_of(level, s & mask) is None
    )


def consistency_violations(costs: CostToGoTable, m: BitMetrics, slack: float = LEMMA_SLACK) -> int:
    """Count supertrellis branches breaking ``c(from) <= c(to) + M(x)``."""
    trellis = costs.trellis
    count = 0
    for j in range(trellis.n):
        src, dst, labels = trellis.branches_at(j)
        branch_metric = np.where(labels != m.y[j], m.weights[j], 0.0)
        lhs = costs.values[j][src]
        rhs = costs.values[j + 1][dst] + branch_metric
        count += int(np.count_nonzero(lhs > rhs + slack))
    return count


def admissibility_violations(
    completion: CostToGoTable, costs: CostToGoTable, slack: float = LEMMA_SLACK
) -> int:
    """Count code-trellis states where ``c(beta(s))`` exceeds the true completion cost within the code.

    ``completion`` is a cost-to-go table over the code trellis itself, e.g. from
    :func:`exhaustive_backward_costs`.
    """
    code_trellis = completion.trellis
    lookup = costs.lookup
    mask = (1 << costs.trellis.num_checks) - 1
    count = 0
    for level in range(-1, code_trellis.n):
        for s, true_cost in zip(code_trellis.states_at(level), completion.values[level + 1].tolist()):
            if lookup[level + 1][s & mask] > true_cost + slack:
                count += 1
    return count


@dataclass
class InvariantRecorder:
    """Search observer counting violations of the ordering properties of the search.

    ``lemma2_violations`` counts extensions where the child's ``f`` fell below its parent's;
    ``discard_violations`` counts discards whose earlier visitor had a larger ``f``.
    """

    slack: float = LEMMA_SLACK
    extensions: int = 0
    discards: int = 0
    lemma2_violations: int = 0
    discard_violations: int = 0
    negative_h: int = 0

    def on_extend(self, parent: SearchPath, child: SearchPath) -> None:
        """Check ``f`` is non-decreasing and ``h`` non-negative."""
        self.extensions += 1
        if child.f < parent.f - self.slack:
            self.lemma2_violations += 1
        if child.h < -self.slack:
            self.negative_h += 1

    def on_discard(self, path: SearchPath, visitor_f: float) -> None:
        """Check the earlier visitor of the same state was no worse."""
        self.discards += 1
        if visitor_f > path.f + self.slack:
            self.discard_violations += 1

    @property
    def total_violations(self) -> int:
        """All recorded violations."""
        return self.lemma2_violations + self.discard_violations + self.negative_h


def pair_invariant_violations(pair: CodePair, code_trellis: Trellis, super_trellis: Trellis) -> int:
    """Homomorphism plus projection violations of one code pair."""
    return homomorphism_violations(
        code_trellis, pair.supercode.H.column_ints(), pair.num_super_checks
    ) + projection_violations(code_trellis, super_trellis)
