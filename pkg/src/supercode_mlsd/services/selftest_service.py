"""Self-test service - oracle equivalence and invariant checks on random code pairs."""

import logging
from collections.abc import Callable
from dataclasses import dataclass

import anyio
import numpy as np

from ..config import DecoderSettings
from ..constants import DEFAULT_EXHAUSTIVE_MAX_K, DEFAULT_MAX_ENUMERATED_PATHS
from ..domain import (
    BitMetrics,
    InvariantRecorder,
    backward_viterbi,
    brute_force_ml,
    build_trellis,
    enumerate_paths,
    exhaustive_backward_costs,
    pfsa_decode,
    uniform_cost_decode,
)
from ..domain.codes import CodePair, random_code_pair
from ..domain.gf2 import mat_vec_mul
from ..domain.oracle import (
    admissibility_violations,
    consistency_violations,
    cost_tables_match,
    metrics_agree,
    pair_invariant_violations,
)
from ..exceptions import ConfigurationError, InvalidCodeError
from ..models import SelfTestCheck, SelfTestResult

logger = logging.getLogger(__name__)

MIN_N = 4
MAX_SUPER_K = 12


@dataclass(frozen=True)
class SelfTestLimits:
    """Enumeration guards applied by the checks."""

    exhaustive_max_k: int = DEFAULT_EXHAUSTIVE_MAX_K
    max_enumerated_paths: int = DEFAULT_MAX_ENUMERATED_PATHS

    @classmethod
    def from_settings(cls, settings: DecoderSettings) -> "SelfTestLimits":
        """Take the guards from the configuration."""
        return cls(exhaustive_max_k=settings.exhaustive_max_k, max_enumerated_paths=settings.max_enumerated_paths)


CheckFn = Callable[[CodePair, BitMetrics, SelfTestLimits], int]


def _random_metrics(rng: np.random.Generator, n: int) -> BitMetrics:
    return BitMetrics.create(rng.integers(0, 2, size=n), rng.uniform(0.0, 2.0, size=n))


def _trellis_violations(pair: CodePair, m: BitMetrics, limits: SelfTestLimits) -> int:
    code_trellis = build_trellis(pair.code.H)
    super_trellis = build_trellis(pair.supercode.H)
    bad = pair_invariant_violations(pair, code_trellis, super_trellis)
    if 1 << pair.code.k <= limits.max_enumerated_paths:
        paths = enumerate_paths(code_trellis, limits.max_enumerated_paths)
        bad += abs(len(paths) - (1 << pair.code.k))
        bad += sum(1 for p in paths if mat_vec_mul(pair.code.H, p).any())
    return bad


def _phase1_violations(pair: CodePair, m: BitMetrics, limits: SelfTestLimits) -> int:
    super_trellis = build_trellis(pair.supercode.H)
    costs = backward_viterbi(super_trellis, m)
    exhaustive = exhaustive_backward_costs(super_trellis, m, limits.exhaustive_max_k)
    bad = 0 if cost_tables_match(costs, exhaustive) else 1
    bad += consistency_violations(costs, m)
    bad += 0 if metrics_agree(costs.root_cost, brute_force_ml(pair.supercode, m).metric) else 1
    code_trellis = build_trellis(pair.code.H)
    return bad + admissibility_violations(exhaustive_backward_costs(code_trellis, m, limits.exhaustive_max_k), costs)


def _search_violations(pair: CodePair, m: BitMetrics, limits: SelfTestLimits) -> int:
    code_trellis = build_trellis(pair.code.H)
    super_trellis = build_trellis(pair.supercode.H)
    recorder = InvariantRecorder()
    report = pfsa_decode(pair, code_trellis, super_trellis, m, observer=recorder)
    oracle = brute_force_ml(pair.code, m)
    ucs = uniform_cost_decode(pair.code, code_trellis, m)
    bad = recorder.total_violations
    bad += 0 if metrics_agree(report.metric, oracle.metric) else 1
    bad += 0 if metrics_agree(ucs.metric, oracle.metric) else 1
    return bad


CHECKS: dict[str, CheckFn] = {
    "trellis_structure": _trellis_violations,
    "phase1_cost_table": _phase1_violations,
    "search_optimality": _search_violations,
}


def run_selftest(seed: int, pairs: int, max_n: int, limits: SelfTestLimits | None = None) -> SelfTestResult:
    """Run every check on ``pairs`` random code pairs with random metrics.

    Drawn supercodes have dimension at most ``limits.exhaustive_max_k``, so every
    exhaustive cost table stays within the guard.

    Raises
    ------
        ConfigurationError: If ``pairs`` is not positive or the exhaustive guard is below 2.
        InvalidCodeError: If ``max_n`` is below the shortest drawn block length.

    """
    limits = limits or SelfTestLimits()
    if pairs < 1:
        raise ConfigurationError(f"Self-test needs at least one code pair, got {pairs}")
    if max_n < MIN_N:
        raise InvalidCodeError(f"Self-test block length must be at least {MIN_N}, got {max_n}")
    max_super_k = min(MAX_SUPER_K, limits.exhaustive_max_k)
    if max_super_k < 2:
        raise ConfigurationError(f"Exhaustive guard must allow dimension 2, got {limits.exhaustive_max_k}")
    rng = np.random.default_rng(seed)
    samples = [random_code_pair(rng, max_n=max_n, max_super_k=max_super_k, min_n=MIN_N) for _ in range(pairs)]
    inputs = [(pair, _random_metrics(rng, pair.n)) for pair in samples]
    checks = []
    for name, check in CHECKS.items():
        violations = sum(check(pair, m, limits) for pair, m in inputs)
        checks.append(SelfTestCheck(name=name, passed=violations == 0, detail=f"{violations} violations"))
    return SelfTestResult(seed=seed, checks=checks)


class SelfTestService:
    """Service running the in-package invariant suite."""

    def __init__(self, settings: DecoderSettings | None = None):
        """Initialize the self-test service.

        Args:
        ----
            settings: Source of the enumeration guards; defaults apply when omitted.

        """
        self.limits = SelfTestLimits.from_settings(settings) if settings is not None else SelfTestLimits()

    async def selftest(self, seed: int = 0, pairs: int = 20, max_n: int = 12) -> SelfTestResult:
        """Run the suite in a worker thread and log a summary."""
        result = await anyio.to_thread.run_sync(run_selftest, seed, pairs, max_n, self.limits)
        for check in result.checks:
            logger.info("[SelfTestService] %s: %s (%s)", check.name, "ok" if check.passed else "FAILED", check.detail)
        return result
