"""Test suite for the simulation service."""

import numpy as np
import pytest

from supercode_mlsd.config import DecoderSettings
from supercode_mlsd.constants import REFERENCE_RMLD_METRICS
from supercode_mlsd.domain.channel import snr_b_to_sigma
from supercode_mlsd.infrastructure import ExperimentFileRepository
from supercode_mlsd.models import CodeSpec, SimConfig, SimRow
from supercode_mlsd.services import CodeService, SimulationService
from supercode_mlsd.services.simulation_service import TrialOutcome, run_trials, summarize, transmitted_codeword


def _without_time(rows: list[SimRow]) -> list[dict]:
    return [row.model_dump(exclude={"wall_time_seconds"}) for row in rows]


def _ber_interval(outcomes: list[TrialOutcome], n: int, z: float = 3.0) -> tuple[float, float]:
    fractions = np.array([o.bit_errors / n for o in outcomes])
    half = z * fractions.std(ddof=1) / np.sqrt(len(fractions))
    return fractions.mean() - half, fractions.mean() + half


def _wilson_interval(errors: int, trials: int, z: float = 3.0) -> tuple[float, float]:
    p = errors / trials
    center = (p + z**2 / (2 * trials)) / (1 + z**2 / trials)
    half = z * np.sqrt(p * (1 - p) / trials + z**2 / (4 * trials**2)) / (1 + z**2 / trials)
    return center - half, center + half


def _overlap(a: tuple[float, float], b: tuple[float, float]) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


class TestSimulationService:
    """Test suite for SimulationService."""

    @pytest.fixture
    def code_service(self, settings: DecoderSettings) -> CodeService:
        """Create a CodeService."""
        return CodeService(ExperimentFileRepository(), settings)

    @pytest.fixture
    def simulation_service(self, code_service: CodeService, settings: DecoderSettings) -> SimulationService:
        """Create a SimulationService with small chunks."""
        return SimulationService(code_service, settings)

    @pytest.mark.anyio
    async def test_noiseless_sweep(self, simulation_service: SimulationService) -> None:
        """Test that sigma zero gives no errors at any point."""
        cfg = SimConfig(code=CodeSpec(rm=(1, 2, 4)), snr_b_db_list=[1.0, 2.0], trials_per_point=40, sigma_override=0.0)
        rows = await simulation_service.run_sweep(cfg)
        assert [row.snr_b_db for row in rows] == [1.0, 2.0]
        for row in rows:
            assert row.trials == 40
            assert row.bit_errors == 0
            assert row.word_errors == 0
            assert row.bits_sent == 40 * 16
            assert row.ber == 0.0

    @pytest.mark.anyio
    async def test_deterministic(self, simulation_service: SimulationService) -> None:
        """Test that repeated sweeps with the same seed produce identical rows."""
        cfg = SimConfig(code=CodeSpec(rm=(1, 2, 4)), snr_b_db_list=[0.0, 3.0], trials_per_point=50, base_seed=7)
        first = await simulation_service.run_sweep(cfg)
        second = await simulation_service.run_sweep(cfg)
        assert _without_time(first) == _without_time(second)

    @pytest.mark.anyio
    async def test_worker_count_does_not_change_results(self, code_service: CodeService) -> None:
        """Test that rows do not depend on chunking or concurrency."""
        cfg = SimConfig(code=CodeSpec(rm=(1, 2, 4)), snr_b_db_list=[1.0], trials_per_point=37, base_seed=3)
        serial = SimulationService(code_service, DecoderSettings(workers=1, trial_chunk_size=100))
        parallel = SimulationService(code_service, DecoderSettings(workers=4, trial_chunk_size=5))
        assert _without_time(await serial.run_sweep(cfg)) == _without_time(await parallel.run_sweep(cfg))

    @pytest.mark.anyio
    async def test_ucs_and_tpmlsd_agree_per_trial(self, code_service: CodeService) -> None:
        """Test that both searches reach the same metric on every trial."""
        setup = await code_service.get_setup(CodeSpec(rm=(1, 2, 4)))
        trials = range(60)
        pfsa = run_trials(setup, "tpmlsd", 0.9, 1.0, 11, trials, False, 20)
        ucs = run_trials(setup, "ucs", 0.9, 1.0, 11, trials, False, 20)
        brute = run_trials(setup, "brute", 0.9, 1.0, 11, trials, False, 20)
        for a, b, c in zip(pfsa, ucs, brute):
            assert a.metric == pytest.approx(b.metric, rel=1e-9)
            assert a.metric == pytest.approx(c.metric, rel=1e-9)
            assert a.metric_evals_phase1 > 0
            assert b.metric_evals_phase1 == 0

    @pytest.mark.anyio
    async def test_transmitted_codewords(self, code_service: CodeService) -> None:
        """Test that transmitted words are codewords and depend on the seed."""
        setup = await code_service.get_setup(CodeSpec(rm=(1, 2, 4)))
        words = [transmitted_codeword(setup, seed, all_zero=False) for seed in range(20)]
        assert all(setup.pair.code.is_codeword(w) for w in words)
        assert len({w.tobytes() for w in words}) > 1
        assert not transmitted_codeword(setup, 5, all_zero=True).any()

    @pytest.mark.anyio
    async def test_all_zero_and_random_codewords_agree(
        self, code_service: CodeService, simulation_service: SimulationService
    ) -> None:
        """Test that all-zero and random-codeword sweeps give overlapping BER and WER intervals."""
        setup = await code_service.get_setup(CodeSpec(rm=(1, 2, 4)))
        sigma = snr_b_to_sigma(0.0, setup.n, setup.k)
        outcomes = {}
        for all_zero in (True, False):
            cfg = SimConfig(
                code=CodeSpec(rm=(1, 2, 4)),
                snr_b_db_list=[0.0],
                trials_per_point=400,
                base_seed=5,
                all_zero_codeword=all_zero,
            )
            outcomes[all_zero] = await simulation_service.run_point(setup, cfg, sigma, 0.0)

        word_errors = {key: sum(1 for o in value if o.bit_errors) for key, value in outcomes.items()}
        assert all(count > 0 for count in word_errors.values())
        ber = {key: _ber_interval(value, setup.n) for key, value in outcomes.items()}
        wer = {key: _wilson_interval(count, 400) for key, count in word_errors.items()}
        assert _overlap(ber[True], ber[False])
        assert _overlap(wer[True], wer[False])

    def test_summarize(self) -> None:
        """Test aggregation of trial outcomes."""
        outcomes = [
            TrialOutcome(0, 0.0, 10, 4, 6, 3, 2, 0),
            TrialOutcome(1, 1.0, 20, 4, 16, 5, 4, 3),
        ]
        row = summarize(2.0, 8, outcomes, 0.5)
        assert row.mean_metric_evals_total == 15.0
        assert row.max_metric_evals_total == 20
        assert row.bit_errors == 3
        assert row.bits_sent == 16
        assert row.ber == 3 / 16
        assert row.word_errors == 1
        assert row.wer == 0.5


class TestReedMuller26:
    """Test suite for RM(2,6) with supercode RM(4,6)."""

    @pytest.fixture
    def simulation_service(self) -> SimulationService:
        """A SimulationService with default settings."""
        settings = DecoderSettings()
        return SimulationService(CodeService(ExperimentFileRepository(), settings), settings)

    @pytest.mark.anyio
    async def test_complexity_falls_with_snr(self, simulation_service: SimulationService) -> None:
        """Test that average metric evaluations decrease from 3 dB to 5 dB and stay below RMLD."""
        cfg = SimConfig(code=CodeSpec(rm=(2, 4, 6)), snr_b_db_list=[3.0, 5.0], trials_per_point=60)
        low, high = await simulation_service.run_sweep(cfg)
        assert low.mean_metric_evals_total > high.mean_metric_evals_total
        assert low.mean_metric_evals_total < REFERENCE_RMLD_METRICS
        assert low.mean_metric_evals_phase1 == high.mean_metric_evals_phase1

    @pytest.mark.slow
    @pytest.mark.anyio
    async def test_search_agrees_with_uniform_cost(self, simulation_service: SimulationService) -> None:
        """Test pfsa and uniform-cost metrics on 200 trials at 3 dB."""
        setup = await simulation_service.code_service.get_setup(CodeSpec(rm=(2, 4, 6)))
        sigma = snr_b_to_sigma(3.0, setup.n, setup.k)
        pfsa = run_trials(setup, "tpmlsd", sigma, 3.0, 0, range(200), False, 20)
        ucs = run_trials(setup, "ucs", sigma, 3.0, 0, range(200), False, 20)
        for a, b in zip(pfsa, ucs):
            assert a.metric == pytest.approx(b.metric, rel=1e-9)

    @pytest.mark.slow
    @pytest.mark.anyio
    async def test_table1_reproduction(self, simulation_service: SimulationService) -> None:
        """Test the complexity trend over 3 to 5 dB with 1000 trials per point."""
        cfg = SimConfig(code=CodeSpec(rm=(2, 4, 6)), snr_b_db_list=[3.0, 3.5, 4.0, 4.5, 5.0], trials_per_point=1000)
        rows = await simulation_service.run_sweep(cfg)
        means = [row.mean_metric_evals_total for row in rows]
        assert means == sorted(means, reverse=True)
        assert 6010 / 3 <= rows[3].mean_metric_evals_total <= 6010 * 3
        assert all(m < REFERENCE_RMLD_METRICS for m in means)

    @pytest.mark.slow
    @pytest.mark.anyio
    async def test_bit_error_rate(self, simulation_service: SimulationService) -> None:
        """Test the bit error rate at 4.5 dB over about two million code bits."""
        cfg = SimConfig(code=CodeSpec(rm=(2, 4, 6)), snr_b_db_list=[4.5], trials_per_point=32_000)
        (row,) = await simulation_service.run_sweep(cfg)
        assert row.bits_sent >= 2_000_000
        assert 10**-5.5 <= row.ber <= 10**-4.5
