"""Test suite for the AWGN channel model and bit metrics."""

import numpy as np
import pytest

from supercode_mlsd.domain.channel import (
    BitMetrics,
    bit_metric,
    gaussian_noise,
    path_metric,
    random_message_bits,
    sigma_to_n0,
    snr_b_to_sigma,
    transmit,
)
from supercode_mlsd.exceptions import DimensionMismatchError, InvalidCodeError, MetricError


class TestSnrConversion:
    """Test suite for SNR per information bit to noise level."""

    def test_rm_2_6_noise_variance(self):
        """Test the noise variance of a rate 22/64 code at 4.5 dB and 3 dB."""
        assert snr_b_to_sigma(4.5, 64, 22) ** 2 == pytest.approx(0.5161, abs=1e-3)
        assert snr_b_to_sigma(3.0, 64, 22) ** 2 == pytest.approx(0.729, abs=1e-3)

    def test_unit_sigma(self):
        """Test that sigma is one when (k/n) SNR_b is one half."""
        assert snr_b_to_sigma(0.0, 2, 1) == pytest.approx(1.0)

    def test_n0(self):
        """Test N0 = 2 sigma^2."""
        assert sigma_to_n0(0.5) == pytest.approx(0.5)

    def test_rejects_empty_code(self):
        """Test that a zero-dimensional code has no SNR per information bit."""
        with pytest.raises(InvalidCodeError):
            snr_b_to_sigma(3.0, 8, 0)


class TestNoise:
    """Test suite for the seeded noise generator."""

    def test_deterministic(self):
        """Test that equal seeds give equal noise and different seeds differ."""
        assert np.array_equal(gaussian_noise(7, 100), gaussian_noise(7, 100))
        assert not np.array_equal(gaussian_noise(7, 100), gaussian_noise(8, 100))

    def test_prefix_stable(self):
        """Test that a shorter draw is a prefix of a longer one."""
        assert np.array_equal(gaussian_noise(3, 10), gaussian_noise(3, 50)[:10])

    def test_standard_normal_moments(self):
        """Test sample mean and deviation of a large draw."""
        z = gaussian_noise(11, 40000)
        assert abs(z.mean()) < 0.03
        assert z.std() == pytest.approx(1.0, abs=0.03)

    def test_message_bits(self):
        """Test that message bits are deterministic, binary and balanced."""
        bits = random_message_bits(5, 4000)
        assert np.array_equal(bits, random_message_bits(5, 4000))
        assert set(bits.tolist()) == {0, 1}
        assert 0.45 < bits.mean() < 0.55
        assert random_message_bits(5, 0).size == 0


class TestTransmit:
    """Test suite for antipodal transmission."""

    def test_noiseless(self):
        """Test that sigma zero returns the antipodal signal and the sent bits."""
        out = transmit("0110", 0.0, seed=1)
        assert out.r.tolist() == [1.0, -1.0, -1.0, 1.0]
        assert out.y.tolist() == [0, 1, 1, 0]
        assert out.phi_abs.tolist() == [1.0, 1.0, 1.0, 1.0]
        assert out.n0 == 0.0

    def test_deterministic_in_seed(self):
        """Test that the received vector depends only on the codeword, sigma and seed."""
        a = transmit("0" * 16, 0.8, seed=42)
        b = transmit("0" * 16, 0.8, seed=42)
        assert np.array_equal(a.r, b.r)
        assert np.array_equal(a.r, 1.0 + 0.8 * gaussian_noise(42, 16))

    def test_metrics_follow_sign(self):
        """Test that hard decisions are the signs and weights the magnitudes."""
        out = transmit("0" * 32, 1.0, seed=9, snr_b_db=0.0)
        m = out.metrics()
        assert np.array_equal(m.y, (out.r < 0).astype(np.uint8))
        assert np.array_equal(m.weights, np.abs(out.r))
        assert out.snr_b_db == 0.0

    def test_rejects_negative_sigma(self):
        """Test that a negative noise level is rejected."""
        with pytest.raises(MetricError):
            transmit("01", -0.1, seed=0)


class TestMetrics:
    """Test suite for bit and path metrics."""

    def test_bit_metric(self):
        """Test that the reliability is paid only on disagreement."""
        assert bit_metric(1, 1, 2.5) == 0.0
        assert bit_metric(0, 1, 2.5) == 2.5
        with pytest.raises(MetricError):
            bit_metric(0, 1, -1.0)

    def test_path_metric(self):
        """Test path metrics against hand-computed sums."""
        m = BitMetrics.create("100", [1.0, 2.0, 3.0])
        assert path_metric("100", m) == 0.0
        assert path_metric("011", m) == 6.0
        assert path_metric("001", m) == 4.0

    def test_path_metric_length_mismatch(self):
        """Test that a path of the wrong length is rejected."""
        with pytest.raises(DimensionMismatchError):
            path_metric("10", BitMetrics.create("100", [1.0, 2.0, 3.0]))

    def test_rejects_negative_weights(self):
        """Test that negative reliabilities are rejected."""
        with pytest.raises(MetricError):
            BitMetrics.create("10", [1.0, -0.5])

    def test_from_received_zero_decides_zero(self):
        """Test that a received value of exactly zero is decided as 0."""
        m = BitMetrics.from_received([0.0, -0.3, 0.7])
        assert m.y.tolist() == [0, 1, 0]
        assert m.weights.tolist() == pytest.approx([0.0, 0.3, 0.7])

    def test_from_llr(self):
        """Test metrics built from log-likelihood ratios."""
        m = BitMetrics.from_llr([-2.0, 0.5, 0.0])
        assert m.y.tolist() == [1, 0, 0]
        assert m.weights.tolist() == [2.0, 0.5, 0.0]

    def test_scaled(self):
        """Test that scaling keeps decisions and multiplies weights."""
        m = BitMetrics.create("10", [1.0, 2.0]).scaled(3.0)
        assert m.y.tolist() == [1, 0]
        assert m.weights.tolist() == [3.0, 6.0]
        with pytest.raises(MetricError):
            m.scaled(0.0)
