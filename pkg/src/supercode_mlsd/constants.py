"""Constants and type aliases for supercode-mlsd."""

from typing import Literal

# Type Aliases
DecoderName = Literal["tpmlsd", "ucs", "brute"]
OutputFormat = Literal["csv", "json"]
TrellisMode = Literal["auto", "explicit", "lazy"]

# Numerical tolerances
LEMMA_SLACK = 1e-12  # absolute slack for f non-decreasing along a path
COST_TABLE_ATOL = 1e-12  # dynamic programming vs exhaustive cost-to-go
METRIC_RTOL = 1e-9  # decoder metric vs oracle metric

# Default guards
DEFAULT_MAX_TRELLIS_STATES = 1 << 24
DEFAULT_EXPLICIT_STATE_LIMIT = 1 << 16
DEFAULT_BRUTE_FORCE_MAX_K = 20
DEFAULT_EXHAUSTIVE_MAX_K = 12
DEFAULT_MAX_ENUMERATED_PATHS = 1 << 20

# Channel
SIGNAL_ENERGY = 1.0  # per channel bit

# CSV columns, in output order
SIM_ROW_FIELDS = (
    "snr_b_db",
    "trials",
    "mean_metric_evals_total",
    "mean_metric_evals_phase1",
    "mean_metric_evals_phase2",
    "max_metric_evals_total",
    "mean_expansions",
    "mean_open_stack_peak",
    "bit_errors",
    "bits_sent",
    "ber",
    "word_errors",
    "wer",
    "wall_time_seconds",
)

# Average number of metric evaluations for RM(2,6) with supercode RM(4,6), as published.
TABLE1_SNR_B_DB = (3.0, 3.5, 4.0, 4.5, 5.0)
REFERENCE_RMLD_METRICS = 78209
REFERENCE_LMLD_LOWER_BOUND = 2097152
REFERENCE_TPMLSD_METRICS: dict[float, int] = {
    3.0: 10078,
    3.5: 7863,
    4.0: 6602,
    4.5: 6010,
    5.0: 5695,
}

# Named sweep presets: (r, rbar, m), SNR list, trials per point
PRESETS: dict[str, tuple[tuple[int, int, int], tuple[float, ...], int]] = {
    "table1": ((2, 4, 6), TABLE1_SNR_B_DB, 1000),
}

# CLI exit codes
EXIT_OK = 0
EXIT_INTERNAL_ERROR = 1
EXIT_USAGE_ERROR = 2
