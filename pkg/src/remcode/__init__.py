"""Polynomial remainder codes over finite fields.

Residue-vector codes defined by pairwise coprime monic moduli of arbitrary
degrees, with Reed-Solomon codes as the all-degree-one special case.
Provides encoding through the residue transform, erasure recovery by
fixed-transform interpolation, gcd-based error decoding, brute-force
reference decoders, and a channel simulator CLI.
"""

from .field import GF, Field
from .poly import Poly, count_irreducible, is_irreducible, poly_gcd, poly_xgcd
from .code import (
    CodeSpec,
    Codeword,
    distances,
    encode,
    min_degree_distance,
    min_hamming_distance,
    psi_inverse,
    weights,
)
from .interpolate import ErasurePattern, interpolate_direct, interpolate_fixed_transform
from .decoder import (
    Algorithm,
    DecodeOptions,
    DecodeOutcome,
    DecodeStatus,
    FailureReason,
    GcdResult,
    Recovery,
    Stopping,
    build_candidate_list,
    decode,
    error_factor_poly,
    error_factor_test,
    error_locator_poly,
    error_locator_test,
    extended_gcd,
    factor_interpolate,
    list_decode,
    partial_gcd_full,
    partial_gcd_upper,
    upper_parts,
)
from .oracle import CodeScanReport, brute_force_decode, exhaustive_scan
from .sim import ChannelModel, SimReport, corrupt, simulate
from .tables import emit_tables

__all__ = [
    "GF",
    "Field",
    "Poly",
    "CodeSpec",
    "Codeword",
    "encode",
    "psi_inverse",
    "weights",
    "distances",
    "min_degree_distance",
    "min_hamming_distance",
    "ErasurePattern",
    "interpolate_direct",
    "interpolate_fixed_transform",
    "Algorithm",
    "Stopping",
    "Recovery",
    "DecodeOptions",
    "DecodeOutcome",
    "DecodeStatus",
    "FailureReason",
    "GcdResult",
    "decode",
    "list_decode",
    "build_candidate_list",
    "extended_gcd",
    "partial_gcd_full",
    "partial_gcd_upper",
    "upper_parts",
    "error_factor_poly",
    "error_locator_poly",
    "error_factor_test",
    "error_locator_test",
    "factor_interpolate",
    "CodeScanReport",
    "brute_force_decode",
    "exhaustive_scan",
    "ChannelModel",
    "SimReport",
    "corrupt",
    "simulate",
    "emit_tables",
    "count_irreducible",
    "is_irreducible",
    "poly_gcd",
    "poly_xgcd",
]
