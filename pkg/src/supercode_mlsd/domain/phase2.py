"""Priority-first search over the code trellis guided by the supercode cost-to-go.

The Open Stack is a binary heap ordered by ``(f, -level, labels)``: least ``f`` first, then
the deeper path, then the lexicographically smaller label sequence. Label sequences are
packed into integers with the first label as the most significant bit, so for paths of the
same length integer order is lexicographic order and every heap key is unique.
"""

import heapq
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from ..exceptions import (
    DecodingError,
    DimensionMismatchError,
    InvalidCodeError,
    SearchExhaustedError,
    TrellisError,
)
from .channel import BitMetrics
from .codes import CodePair
from .gf2 import BinaryVector
from .observer import SearchObserver
from .phase1 import CostToGoTable, backward_viterbi
from .trellis import SearchTrellis, Trellis

Heuristic = Callable[[int, int], float]


@dataclass(frozen=True, slots=True)
class SearchPath:
    """A path from the root to ``syndrome`` at ``level`` with its ``g`` and ``f`` values."""

    labels: int
    level: int
    syndrome: int
    g: float
    f: float

    @property
    def h(self) -> float:
        """Heuristic part ``f - g``."""
        return self.f - self.g

    def bits(self) -> BinaryVector:
        """Labels of levels ``0..level`` as a bit vector."""
        length = self.level + 1
        out = np.array([(self.labels >> (length - 1 - j)) & 1 for j in range(length)], dtype=np.uint8)
        out.setflags(write=False)
        return out


@dataclass(frozen=True, eq=False)
class DecodeReport:
    """ML decision plus the counters of one decode.

    Attributes
    ----------
        codeword: Decided codeword.
        metric: Its path metric.
        error_pattern: ``codeword XOR y``.
        metric_evals_phase1: Branch metrics computed by the backward Viterbi pass.
        metric_evals_phase2: Successor ``f`` evaluations of the search.
        metric_evals_total: Sum of both phases.
        open_stack_peak: Largest Open Stack size seen.
        expansions: Paths whose successors were generated.
        incumbent_updates: Times the upper bound ``rho`` was lowered.

    """

    codeword: BinaryVector
    metric: float
    error_pattern: BinaryVector
    metric_evals_phase1: int
    metric_evals_phase2: int
    metric_evals_total: int
    open_stack_peak: int
    expansions: int
    incumbent_updates: int


def supercode_heuristic(costs: CostToGoTable) -> Heuristic:
    """``h(level, s) = c(beta(s))``: the cost-to-go of the projected supertrellis state."""
    table = costs.lookup
    mask = (1 << costs.trellis.num_checks) - 1

    def heuristic(level: int, syndrome: int) -> float:
        try:
            return table[level + 1][syndrome & mask]
        except KeyError as e:
            raise TrellisError(
                f"Projected state {syndrome & mask:b} at level {level} is missing from the supertrellis"
            ) from e

    return heuristic


def zero_heuristic(level: int, syndrome: int) -> float:
    """``h = 0``: plain uniform-cost search."""
    return 0.0


def initial_path(heuristic: Heuristic) -> SearchPath:
    """The path holding only the root state at level -1."""
    return SearchPath(labels=0, level=-1, syndrome=0, g=0.0, f=heuristic(-1, 0))


def evaluate_f(
    parent: SearchPath, label: int, metrics: BitMetrics, costs: CostToGoTable, trellis: SearchTrellis
) -> SearchPath:
    """Extend ``parent`` by one branch labelled ``label`` and evaluate ``f = g + c(beta(s))``.

    Raises
    ------
        TrellisError: If the branch does not exist in ``trellis``.

    """
    for x, target in trellis.successors(parent.level, parent.syndrome):
        if x == label:
            return _extend(parent, x, target, metrics, supercode_heuristic(costs))
    raise TrellisError(f"No branch labelled {label} leaves state {parent.syndrome:b} at level {parent.level}")


def _extend(parent: SearchPath, x: int, target: int, metrics: BitMetrics, heuristic: Heuristic) -> SearchPath:
    level = parent.level + 1
    g = parent.g + (float(metrics.weights[level]) if x != metrics.y[level] else 0.0)
    return SearchPath((parent.labels << 1) | x, level, target, g, g + heuristic(level, target))


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one priority-first search, before it is packaged as a report."""

    best: SearchPath
    evaluations: int
    expansions: int
    open_stack_peak: int
    incumbent_updates: int


def priority_first_search(
    trellis: SearchTrellis,
    metrics: BitMetrics,
    heuristic: Heuristic,
    observer: SearchObserver | None = None,
) -> SearchOutcome:
    """Find a least-metric root-to-final path of ``trellis`` with a consistent ``heuristic``.

    Args:
    ----
        trellis: Code trellis, explicit or lazy.
        metrics: Hard decisions and reliabilities of the received word.
        heuristic: Lower bound on the completion cost of a state, zero on the final level.
        observer: Optional receiver of extension and discard events.

    Returns:
    -------
        The winning full-length path and the search counters.

    Raises:
    ------
        DimensionMismatchError: If metrics and trellis lengths differ.
        SearchExhaustedError: If the Open Stack empties before any full-length path is found.

    """
    n = trellis.n
    if metrics.n != n:
        raise DimensionMismatchError(f"Metrics of length {metrics.n} for a trellis of length {n}")
    y = metrics.y.tolist()
    w = metrics.weights.tolist()

    rho = math.inf
    best: SearchPath | None = None
    root = initial_path(heuristic)
    open_stack: list[tuple[float, int, int, SearchPath]] = [(root.f, 1, 0, root)]
    close_table: dict[tuple[int, int], float] = {}
    evaluations = expansions = incumbent_updates = 0
    peak = 1

    while open_stack:
        path = heapq.heappop(open_stack)[3]
        key = (path.level, path.syndrome)
        visitor_f = close_table.get(key)
        if visitor_f is not None:
            if observer is not None:
                observer.on_discard(path, visitor_f)
            continue
        close_table[key] = path.f
        expansions += 1

        level = path.level + 1
        finished: list[SearchPath] = []
        for x, target in trellis.successors(path.level, path.syndrome):
            g = path.g + (w[level] if x != y[level] else 0.0)
            child = SearchPath((path.labels << 1) | x, level, target, g, g + heuristic(level, target))
            evaluations += 1
            if observer is not None:
                observer.on_extend(path, child)
            if child.f >= rho:
                continue
            if level == n - 1:
                finished.append(child)
            else:
                heapq.heappush(open_stack, (child.f, -level, child.labels, child))

        if finished:
            best = min(finished, key=lambda p: (p.g, p.labels))
            rho = best.g
            incumbent_updates += 1
        peak = max(peak, len(open_stack))

    if best is None:
        raise SearchExhaustedError("Open Stack emptied without reaching level n-1; the trellis is malformed")
    return SearchOutcome(
        best=best,
        evaluations=evaluations,
        expansions=expansions,
        open_stack_peak=peak,
        incumbent_updates=incumbent_updates,
    )


def build_report(outcome: SearchOutcome, metrics: BitMetrics, phase1_evals: int) -> DecodeReport:
    """Package a search outcome as a :class:`DecodeReport`."""
    codeword = outcome.best.bits()
    error_pattern = codeword ^ metrics.y
    error_pattern.setflags(write=False)
    return DecodeReport(
        codeword=codeword,
        metric=outcome.best.g,
        error_pattern=error_pattern,
        metric_evals_phase1=phase1_evals,
        metric_evals_phase2=outcome.evaluations,
        metric_evals_total=phase1_evals + outcome.evaluations,
        open_stack_peak=outcome.open_stack_peak,
        expansions=outcome.expansions,
        incumbent_updates=outcome.incumbent_updates,
    )


def check_trellis_matches(trellis: SearchTrellis, pair_columns: tuple[int, ...], rows: int, role: str) -> None:
    """Raise InvalidCodeError unless ``trellis`` was built from the given parity-check columns."""
    if trellis.num_checks != rows or tuple(trellis.columns) != tuple(pair_columns):
        raise InvalidCodeError(f"The {role} trellis was not built from the {role} parity-check matrix")


def pfsa_decode(
    pair: CodePair,
    t: SearchTrellis,
    t_bar: Trellis,
    m: BitMetrics,
    observer: SearchObserver | None = None,
) -> DecodeReport:
    """Decode ``m`` to an ML codeword of ``pair.code`` in two phases.

    Phase 1 runs the backward Viterbi algorithm over the supertrellis ``t_bar``; phase 2
    searches the code trellis ``t`` with ``h = c(beta(s))``.

    Raises
    ------
        InvalidCodeError: If a trellis does not belong to the pair.
        DimensionMismatchError: If ``m`` has the wrong length.
        DecodingError: If the decision is not a codeword.

    """
    check_trellis_matches(t, pair.code.H.column_ints(), pair.code.H.rows, "code")
    if not isinstance(t_bar, Trellis):
        raise InvalidCodeError("The supercode trellis must be built explicitly")
    check_trellis_matches(t_bar, pair.supercode.H.column_ints(), pair.supercode.H.rows, "supercode")
    costs = backward_viterbi(t_bar, m)
    outcome = priority_first_search(t, m, supercode_heuristic(costs), observer)
    report = build_report(outcome, m, costs.metric_evals)
    check_codeword(pair.code.H.column_ints(), report.codeword)
    return report


def check_codeword(columns: tuple[int, ...], codeword: BinaryVector) -> None:
    """Raise DecodingError unless ``codeword`` has zero syndrome under the given columns."""
    syndrome = 0
    for col, bit in zip(columns, codeword.tolist()):
        if bit:
            syndrome ^= col
    if syndrome:
        raise DecodingError("Decoded word has a nonzero syndrome")
