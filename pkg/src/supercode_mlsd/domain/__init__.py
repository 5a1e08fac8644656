"""Domain layer for supercode-mlsd (pure decoding logic, no I/O)."""

from .channel import BitMetrics, ChannelOutput, bit_metric, path_metric, snr_b_to_sigma, transmit
from .codes import CodePair, LinearCode, pair_from_parity_check, rm_code_pair, rm_dimension, rm_generator
from .gf2 import BinaryMatrix, BinaryVector, extend_basis, mat_vec_mul, rank, row_reduce
from .observer import SearchObserver
from .oracle import BruteForceResult, InvariantRecorder, brute_force_ml, exhaustive_backward_costs, uniform_cost_decode
from .phase1 import CostToGoTable, backward_viterbi
from .phase2 import DecodeReport, SearchPath, evaluate_f, pfsa_decode
from .trellis import (
    AnyTrellis,
    LazyTrellis,
    Trellis,
    TrellisProfile,
    TrellisState,
    beta_project,
    build_trellis,
    enumerate_paths,
    make_code_trellis,
    trellis_profile,
)

__all__ = [
    # GF(2)
    "BinaryMatrix",
    "BinaryVector",
    "extend_basis",
    "mat_vec_mul",
    "rank",
    "row_reduce",
    # Codes
    "CodePair",
    "LinearCode",
    "pair_from_parity_check",
    "rm_code_pair",
    "rm_dimension",
    "rm_generator",
    # Trellises
    "AnyTrellis",
    "LazyTrellis",
    "Trellis",
    "TrellisProfile",
    "TrellisState",
    "beta_project",
    "build_trellis",
    "enumerate_paths",
    "make_code_trellis",
    "trellis_profile",
    # Channel
    "BitMetrics",
    "ChannelOutput",
    "bit_metric",
    "path_metric",
    "snr_b_to_sigma",
    "transmit",
    # Decoding
    "CostToGoTable",
    "backward_viterbi",
    "DecodeReport",
    "SearchPath",
    "SearchObserver",
    "evaluate_f",
    "pfsa_decode",
    # Oracles
    "BruteForceResult",
    "InvariantRecorder",
    "brute_force_ml",
    "exhaustive_backward_costs",
    "uniform_cost_decode",
]
