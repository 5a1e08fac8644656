"""Backward Viterbi pass over the supertrellis, producing the cost-to-go table."""

from dataclasses import dataclass
from functools import cached_property

import numpy as np
import numpy.typing as npt

from ..exceptions import DimensionMismatchError, TrellisError
from .channel import BitMetrics
from .trellis import Trellis


@dataclass(frozen=True, eq=False)
class CostToGoTable:
    """Least metric ``c`` of any backward path from the final zero state to each supertrellis state.

    ``values[level + 1][i]`` belongs to the ``i``-th state of ``trellis`` at ``level`` and sums
    the bit metrics of labels ``level + 1 .. n - 1``, so ``c`` at the final level is zero and
    ``c`` at level -1 is the metric of the supercode's ML codeword.
    """

    trellis: Trellis
    values: tuple[npt.NDArray[np.float64], ...]
    metric_evals: int

    def cost(self, level: int, syndrome: int) -> float:
        """``c`` of the supertrellis state ``syndrome`` at ``level``.

        Raises
        ------
            TrellisError: If the state is not in the supertrellis.

        """
        idx = self.trellis.index_of(level, syndrome)
        if idx is None:
            raise TrellisError(f"State {syndrome:b} at level {level} is not in the supertrellis")
        return float(self.values[level + 1][idx])

    @cached_property
    def lookup(self) -> tuple[dict[int, float], ...]:
        """Per-level ``syndrome -> c`` dictionaries, indexed by level + 1."""
        return tuple(
            dict(zip(self.trellis.states_at(level), self.values[level + 1].tolist()))
            for level in range(-1, self.trellis.n)
        )

    @property
    def root_cost(self) -> float:
        """``c`` at level -1: the supercode ML metric."""
        return float(self.values[0][0])


def backward_viterbi(trellis: Trellis, metrics: BitMetrics) -> CostToGoTable:
    """Run the Viterbi algorithm from level n-1 back to level -1.

    Each state keeps the least metric among its entering backward paths; every branch is
    evaluated exactly once, so ``metric_evals`` equals the branch count.

    Raises
    ------
        DimensionMismatchError: If metrics and trellis lengths differ.

    """
    n = trellis.n
    if metrics.n != n:
        raise DimensionMismatchError(f"Metrics of length {metrics.n} for a trellis of length {n}")
    values: list[npt.NDArray[np.float64]] = [np.empty(0)] * (n + 1)
    values[n] = np.zeros(trellis.num_states(n - 1))
    evals = 0
    for j in range(n - 1, -1, -1):
        src, dst, labels = trellis.branches_at(j)
        branch_metric = np.where(labels != metrics.y[j], metrics.weights[j], 0.0)
        prev = np.full(trellis.num_states(j - 1), np.inf)
        np.minimum.at(prev, src, values[j + 1][dst] + branch_metric)
        values[j] = prev
        evals += int(labels.size)
    for arr in values:
        arr.setflags(write=False)
    return CostToGoTable(trellis=trellis, values=tuple(values), metric_evals=evals)
