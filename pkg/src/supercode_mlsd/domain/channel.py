"""Antipodal signalling over AWGN, hard decisions and the path metric.

Noise generator
---------------
Every call to :func:`transmit` owns a fresh Philox4x64-10 counter-based generator
(``numpy.random.Philox``) keyed with the trial seed, counter starting at zero. Raw 64-bit
outputs ``w`` are mapped to uniforms ``u = (w >> 11) * 2**-53`` in [0, 1), consumed two at a
time as ``a = 2u_1 - 1``, ``b = 2u_2 - 1``. The pair is rejected unless ``0 < s < 1`` with
``s = a*a + b*b``; an accepted pair yields the two normals ``a*k`` and ``b*k`` with
``k = sqrt(-2 ln(s) / s)`` (Marsaglia polar method), appended in that order. The first ``n``
normals, scaled by sigma, are the noise samples. Random messages use the same generator
keyed with ``seed + 2**64``.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..constants import SIGNAL_ENERGY
from ..exceptions import DimensionMismatchError, InvalidCodeError, MetricError
from .gf2 import BinaryVector, BitsLike, as_binary_vector

FloatArray = npt.NDArray[np.float64]

_MESSAGE_KEY_OFFSET = 1 << 64
_UNIT = 2.0**-53


def _readonly(arr: npt.NDArray) -> npt.NDArray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BitMetrics:
    """Hard decisions ``y`` and non-negative reliabilities ``weights`` (|LLR| or |r|)."""

    y: BinaryVector
    weights: FloatArray

    def __post_init__(self) -> None:
        """Validate lengths and signs."""
        if self.y.shape != self.weights.shape:
            raise DimensionMismatchError(f"Hard decisions {self.y.shape} and weights {self.weights.shape} differ")
        if np.any(self.weights < 0) or np.any(np.isnan(self.weights)):
            raise MetricError("Reliabilities must be non-negative numbers")

    @classmethod
    def create(cls, y: BitsLike, weights: npt.ArrayLike) -> "BitMetrics":
        """Validate and freeze raw hard decisions and weights."""
        return cls(as_binary_vector(y), _readonly(np.array(weights, dtype=np.float64)))

    @classmethod
    def from_received(cls, r: npt.ArrayLike) -> "BitMetrics":
        """AWGN-simplified metrics: ``y_j = 1`` iff ``r_j < 0`` and weight ``|r_j|``."""
        received = np.asarray(r, dtype=np.float64)
        if received.ndim != 1:
            raise DimensionMismatchError(f"Received vector must be one-dimensional, got shape {received.shape}")
        return cls(_readonly((received < 0).astype(np.uint8)), _readonly(np.abs(received)))

    @classmethod
    def from_llr(cls, phi: npt.ArrayLike) -> "BitMetrics":
        """Metrics from log-likelihood ratios ``log Pr(r|0)/Pr(r|1)`` of any memoryless channel."""
        llr = np.asarray(phi, dtype=np.float64)
        if llr.ndim != 1:
            raise DimensionMismatchError(f"LLR vector must be one-dimensional, got shape {llr.shape}")
        return cls(_readonly((llr < 0).astype(np.uint8)), _readonly(np.abs(llr)))

    @property
    def n(self) -> int:
        """Block length."""
        return int(self.y.size)

    def scaled(self, factor: float) -> "BitMetrics":
        """Same decisions with every weight multiplied by ``factor > 0``."""
        if factor <= 0:
            raise MetricError(f"Scale factor must be positive, got {factor}")
        return BitMetrics(self.y, _readonly(self.weights * factor))


@dataclass(frozen=True, eq=False)
class ChannelOutput:
    """One noisy observation of a transmitted codeword."""

    r: FloatArray
    phi_abs: FloatArray
    y: BinaryVector
    snr_b_db: float | None
    energy: float
    n0: float

    def metrics(self) -> BitMetrics:
        """Bit metrics in the AWGN-simplified form."""
        return BitMetrics(self.y, self.phi_abs)


def snr_b_to_sigma(snr_b_db: float, n: int, k: int) -> float:
    """Noise standard deviation for SNR per information bit ``snr_b_db`` (unit signal energy).

    ``E/N0 = (k/n) SNR_b`` and ``sigma**2 = N0/2 = n / (2 k SNR_b)``.

    Raises
    ------
        InvalidCodeError: Unless ``1 <= k <= n``.

    """
    if k < 1 or n < k:
        raise InvalidCodeError(f"SNR per information bit needs 1 <= k <= n, got n={n}, k={k}")
    snr_linear = 10.0 ** (snr_b_db / 10.0)
    return float(np.sqrt(n / (2.0 * k * snr_linear)))


def sigma_to_n0(sigma: float) -> float:
    """Single-sided noise density ``N0 = 2 sigma**2``."""
    return 2.0 * sigma * sigma


def gaussian_noise(seed: int, count: int) -> FloatArray:
    """Draw ``count`` standard normals with the documented Philox + polar-method generator."""
    bits = np.random.Philox(key=seed % _MESSAGE_KEY_OFFSET)
    out = np.empty(count, dtype=np.float64)
    filled = 0
    while filled < count:
        pairs = max(4, count - filled)
        raw = bits.random_raw(2 * pairs)
        u = 2.0 * ((raw >> np.uint64(11)).astype(np.float64) * _UNIT) - 1.0
        a, b = u[0::2], u[1::2]
        s = a * a + b * b
        keep = (s > 0.0) & (s < 1.0)
        a, b, s = a[keep], b[keep], s[keep]
        k = np.sqrt(-2.0 * np.log(s) / s)
        normals = np.column_stack((a * k, b * k)).ravel()
        take = min(normals.size, count - filled)
        out[filled : filled + take] = normals[:take]
        filled += take
    return out


def random_message_bits(seed: int, k: int) -> BinaryVector:
    """``k`` uniform information bits from the message stream of ``seed``."""
    bits = np.random.Philox(key=(seed % _MESSAGE_KEY_OFFSET) + _MESSAGE_KEY_OFFSET)
    raw = bits.random_raw(k) if k else np.zeros(0, dtype=np.uint64)
    return _readonly((raw >> np.uint64(63)).astype(np.uint8))


def transmit(v: BitsLike, sigma: float, seed: int, snr_b_db: float | None = None) -> ChannelOutput:
    """Send codeword ``v`` antipodally: ``r_j = (-1)**v_j + sigma * z_j``.

    Deterministic in ``(v, sigma, seed)``. A received value of exactly zero is decided as 0.
    """
    if sigma < 0:
        raise MetricError(f"Noise standard deviation must be non-negative, got {sigma}")
    codeword = as_binary_vector(v)
    signal = np.sqrt(SIGNAL_ENERGY) * (1.0 - 2.0 * codeword.astype(np.float64))
    noise = sigma * gaussian_noise(seed, codeword.size) if sigma > 0 else np.zeros(codeword.size)
    r = _readonly(signal + noise)
    return ChannelOutput(
        r=r,
        phi_abs=_readonly(np.abs(r)),
        y=_readonly((r < 0).astype(np.uint8)),
        snr_b_db=snr_b_db,
        energy=SIGNAL_ENERGY,
        n0=sigma_to_n0(sigma),
    )


def bit_metric(y_j: int, x_j: int, w_j: float) -> float:
    """``(y_j XOR x_j) * w_j``: the reliability is paid only on disagreement.

    Raises
    ------
        MetricError: If ``w_j`` is negative.

    """
    if w_j < 0:
        raise MetricError(f"Bit reliability must be non-negative, got {w_j}")
    return float(w_j) if y_j != x_j else 0.0


def path_metric(x: BitsLike, m: BitMetrics) -> float:
    """Sum of bit metrics of ``x`` against ``m`` over all positions.

    Raises
    ------
        DimensionMismatchError: If ``x`` and ``m`` have different lengths.

    """
    labels = as_binary_vector(x)
    if labels.size != m.n:
        raise DimensionMismatchError(f"Path of length {labels.size} vs metrics of length {m.n}")
    return float(np.sum(m.weights[labels != m.y]))
