"""Test suite for the priority-first search and the two-phase decoder."""

import numpy as np
import pytest

from supercode_mlsd.domain.channel import BitMetrics, path_metric, snr_b_to_sigma, transmit
from supercode_mlsd.domain.oracle import InvariantRecorder, brute_force_ml, metrics_agree
from supercode_mlsd.domain.phase1 import backward_viterbi
from supercode_mlsd.domain.phase2 import (
    SearchPath,
    evaluate_f,
    initial_path,
    pfsa_decode,
    priority_first_search,
    supercode_heuristic,
)
from supercode_mlsd.domain.trellis import LazyTrellis, build_trellis, enumerate_paths
from supercode_mlsd.exceptions import DimensionMismatchError, InvalidCodeError, SearchExhaustedError, TrellisError


class DeadEndTrellis:
    """Trellis whose root has no successors."""

    n = 2
    num_checks = 1
    columns = (1, 1)
    dimension = 1

    def successors(self, level, syndrome):
        """No branches anywhere."""
        return ()


def _random_metrics(rng, n):
    return BitMetrics.create(rng.integers(0, 2, size=n), rng.uniform(0.0, 2.0, size=n))


class TestSearchPath:
    """Test suite for search path values."""

    def test_bits_and_h(self):
        """Test label unpacking and the heuristic part."""
        path = SearchPath(labels=0b101, level=2, syndrome=0, g=1.5, f=4.0)
        assert path.bits().tolist() == [1, 0, 1]
        assert path.h == 2.5


class TestEvaluateF:
    """Test suite for single-branch evaluation."""

    @pytest.fixture
    def setup(self, hamming_pair, rng):
        """Trellises, metrics and the cost table of the Hamming pair."""
        code_trellis = build_trellis(hamming_pair.code.H)
        super_trellis = build_trellis(hamming_pair.supercode.H)
        m = _random_metrics(rng, 7)
        return code_trellis, m, backward_viterbi(super_trellis, m)

    def test_root_f_is_supercode_metric(self, setup):
        """Test that f at the root is the supercode ML metric."""
        _, _, costs = setup
        assert initial_path(supercode_heuristic(costs)).f == costs.root_cost

    def test_full_length_f_is_metric(self, setup):
        """Test that f equals g (and the path metric) at level n-1."""
        code_trellis, m, costs = setup
        for word in enumerate_paths(code_trellis):
            path = initial_path(supercode_heuristic(costs))
            for x in word.tolist():
                child = evaluate_f(path, x, m, costs, code_trellis)
                assert child.f >= path.f - 1e-12
                path = child
            assert path.f == path.g
            assert path.g == pytest.approx(path_metric(word, m))

    def test_missing_branch(self, setup):
        """Test that a label leaving the trellis is rejected."""
        code_trellis, m, costs = setup
        syndrome = code_trellis.states_at(5)[0]
        ((label, _),) = code_trellis.successors(5, syndrome)
        parent = SearchPath(labels=0, level=5, syndrome=syndrome, g=0.0, f=0.0)
        with pytest.raises(TrellisError):
            evaluate_f(parent, 1 - label, m, costs, code_trellis)


class TestPfsaDecode:
    """Test suite for the two-phase decoder."""

    @pytest.fixture
    def trellises(self, hamming_pair):
        """Explicit code and supercode trellises of the Hamming pair."""
        return build_trellis(hamming_pair.code.H), build_trellis(hamming_pair.supercode.H)

    def test_noiseless_codewords(self, hamming_pair, trellises):
        """Test that every codeword sent without noise is decoded with metric zero."""
        code_trellis, super_trellis = trellises
        for word in enumerate_paths(code_trellis):
            m = transmit(word, 0.0, seed=0).metrics()
            report = pfsa_decode(hamming_pair, code_trellis, super_trellis, m)
            assert np.array_equal(report.codeword, word)
            assert report.metric == 0.0
            assert not report.error_pattern.any()

    def test_single_unreliable_error(self, hamming_pair, trellises):
        """Test that one flipped low-reliability bit is corrected."""
        weights = np.ones(7)
        weights[2] = 0.1
        m = BitMetrics.create("1010110", weights)
        report = pfsa_decode(hamming_pair, *trellises, m)
        assert "".join(map(str, report.codeword.tolist())) == "1000110"
        assert report.metric == pytest.approx(0.1)
        assert report.error_pattern.tolist() == [0, 0, 1, 0, 0, 0, 0]

    def test_report_counters(self, hamming_pair, trellises, rng):
        """Test the relations between the reported counters."""
        code_trellis, super_trellis = trellises
        m = _random_metrics(rng, 7)
        report = pfsa_decode(hamming_pair, code_trellis, super_trellis, m)
        assert report.metric_evals_phase1 == super_trellis.num_branches
        assert report.metric_evals_total == report.metric_evals_phase1 + report.metric_evals_phase2
        assert report.metric == pytest.approx(path_metric(report.codeword, m))
        assert np.array_equal(report.error_pattern, report.codeword ^ m.y)
        assert report.incumbent_updates >= 1
        assert report.expansions >= 7

    def test_matches_brute_force(self, rm_small_pair):
        """Test ML optimality on RM(1,4) with supercode RM(2,4) over noisy trials."""
        code_trellis = build_trellis(rm_small_pair.code.H)
        super_trellis = build_trellis(rm_small_pair.supercode.H)
        G = rm_small_pair.code.G.dense.astype(np.int64)
        rng = np.random.default_rng(1)
        for snr in (1.0, 3.0, 5.0):
            sigma = snr_b_to_sigma(snr, 16, 5)
            for seed in range(150):
                word = (rng.integers(0, 2, size=5) @ G) & 1
                m = transmit(word, sigma, seed).metrics()
                report = pfsa_decode(rm_small_pair, code_trellis, super_trellis, m)
                assert metrics_agree(report.metric, brute_force_ml(rm_small_pair.code, m).metric)

    def test_lazy_code_trellis_gives_same_search(self, hamming_pair, trellises, rng):
        """Test that the lazy code trellis reproduces the explicit search exactly."""
        code_trellis, super_trellis = trellises
        lazy = LazyTrellis(hamming_pair.code.H)
        for _ in range(20):
            m = _random_metrics(rng, 7)
            a = pfsa_decode(hamming_pair, code_trellis, super_trellis, m)
            b = pfsa_decode(hamming_pair, lazy, super_trellis, m)
            assert np.array_equal(a.codeword, b.codeword)
            assert (a.metric_evals_phase2, a.expansions) == (b.metric_evals_phase2, b.expansions)

    def test_all_zero_weights_pick_all_zero_word(self, hamming_pair, trellises):
        """Test tie-breaking when every codeword has metric zero."""
        m = BitMetrics.create("1111111", np.zeros(7))
        report = pfsa_decode(hamming_pair, *trellises, m)
        assert not report.codeword.any()
        assert report.metric == 0.0
        assert report.incumbent_updates == 1

    def test_invariants_hold_during_search(self, hamming_pair, trellises, rng):
        """Test that f never decreases along extensions and discards are justified."""
        for _ in range(30):
            recorder = InvariantRecorder()
            report = pfsa_decode(hamming_pair, *trellises, _random_metrics(rng, 7), observer=recorder)
            assert recorder.total_violations == 0
            assert recorder.extensions == report.metric_evals_phase2

    def test_rejects_swapped_trellises(self, hamming_pair, trellises):
        """Test that trellises must belong to the pair."""
        code_trellis, super_trellis = trellises
        m = BitMetrics.create("0" * 7, np.ones(7))
        with pytest.raises(InvalidCodeError):
            pfsa_decode(hamming_pair, super_trellis, code_trellis, m)
        with pytest.raises(InvalidCodeError):
            pfsa_decode(hamming_pair, code_trellis, LazyTrellis(hamming_pair.supercode.H), m)

    def test_length_mismatch(self, hamming_pair, trellises):
        """Test that metrics of the wrong length are rejected."""
        with pytest.raises(DimensionMismatchError):
            pfsa_decode(hamming_pair, *trellises, BitMetrics.create("000", np.ones(3)))


class TestPriorityFirstSearch:
    """Test suite for the search loop itself."""

    def test_exact_heuristic_sets_incumbent_once(self, hamming_code, rng):
        """Test that a heuristic from the code trellis itself finds the optimum at the first completion."""
        trellis = build_trellis(hamming_code.H)
        for _ in range(20):
            m = _random_metrics(rng, 7)
            outcome = priority_first_search(trellis, m, supercode_heuristic(backward_viterbi(trellis, m)))
            assert outcome.incumbent_updates == 1
            assert outcome.best.g == pytest.approx(brute_force_ml(hamming_code, m).metric)

    def test_exhausted_search(self):
        """Test that a trellis without full-length paths raises."""
        m = BitMetrics.create("00", [1.0, 1.0])
        with pytest.raises(SearchExhaustedError):
            priority_first_search(DeadEndTrellis(), m, lambda level, s: 0.0)
