"""Pytest configuration for supercode_mlsd tests."""

from collections.abc import Generator
from pathlib import Path

import numpy as np
import pytest

from supercode_mlsd.config import DecoderSettings
from supercode_mlsd.domain import BinaryMatrix, CodePair, LinearCode, pair_from_parity_check, rm_code_pair
from supercode_mlsd.infrastructure import clear_global_cache

HAMMING_ROWS = ["1011100", "1101010", "0111001"]
HAMMING_CODEWORD = "1000110"


@pytest.fixture(autouse=True)
def clear_code_cache() -> Generator[None, None, None]:
    """Clear the code setup cache so every test builds in its own event loop."""
    clear_global_cache()
    yield
    clear_global_cache()


@pytest.fixture
def hamming_H() -> BinaryMatrix:
    """Parity-check matrix of the (7,4) Hamming code."""
    return BinaryMatrix.from_rows(HAMMING_ROWS)


@pytest.fixture
def hamming_code(hamming_H: BinaryMatrix) -> LinearCode:
    """The (7,4) Hamming code."""
    return LinearCode.from_parity_check(hamming_H)


@pytest.fixture
def hamming_pair(hamming_H: BinaryMatrix) -> CodePair:
    """Hamming (7,4) with the first parity check as supercode."""
    return pair_from_parity_check(hamming_H, 1)


@pytest.fixture
def spc_H() -> BinaryMatrix:
    """Single parity check on three bits."""
    return BinaryMatrix.from_rows(["111"])


@pytest.fixture
def rm_small_pair() -> CodePair:
    """RM(1,4) inside RM(2,4)."""
    return rm_code_pair(1, 2, 4)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for randomized tests."""
    return np.random.default_rng(20240521)


@pytest.fixture
def settings() -> DecoderSettings:
    """Default settings with a small chunk size so sweeps use several workers."""
    return DecoderSettings(trial_chunk_size=16, workers=4)


@pytest.fixture
def hamming_file(tmp_path: Path) -> Path:
    """Hamming parity-check matrix written in the text format."""
    path = tmp_path / "hamming.txt"
    path.write_text("# Hamming (7,4)\n" + "\n".join(HAMMING_ROWS) + "\n\n\n")
    return path
