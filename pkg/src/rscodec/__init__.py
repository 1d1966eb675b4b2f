"""rscodec: exact Reed-Solomon coding over GF(q).

Encoders/decoders for RS(q, alpha, k) with n = q - 1 evaluation points,
an interpolation-degree decoder and a Peterson-Gorenstein-Zierler decoder
sharing one verified outcome format, a brute-force oracle for small
codes, an instrumented benchmark, and a block-stream CLI.
"""

from .bench import DECODERS, TrialConfig, TrialReport, TrialRow, report_to_json, run_sweep
from .decode_interp import (
    DecodeOutcome,
    DecodeTrace,
    decode,
    decode_via_positions,
    detect_error_count,
    recover_codeword_polynomial,
    solve_locator,
)
from .decode_pgz import PgzTrace, pgz_decode
from .exceptions import (
    DecodeFailure,
    DegreeTooHigh,
    InexactDivision,
    RootCountMismatch,
    SingularLocatorSystem,
    TooLargeToEnumerate,
    TooManyErrors,
    VerifyFailed,
)
from .femat import FeMat, SolveResult, SolveStatus, vandermonde
from .gf import Field, MulOpCounter, find_primitive, mul_ops_total
from .oracle import OracleResult, brute_min_distance, brute_nearest, codebook, hamming
from .poly import Poly
from .rscode import RSCode

__version__ = "0.1.0"

__all__ = [
    "DECODERS",
    "DecodeFailure",
    "DecodeOutcome",
    "DecodeTrace",
    "DegreeTooHigh",
    "FeMat",
    "Field",
    "InexactDivision",
    "MulOpCounter",
    "OracleResult",
    "PgzTrace",
    "Poly",
    "RSCode",
    "RootCountMismatch",
    "SingularLocatorSystem",
    "SolveResult",
    "SolveStatus",
    "TooLargeToEnumerate",
    "TooManyErrors",
    "TrialConfig",
    "TrialReport",
    "TrialRow",
    "VerifyFailed",
    "brute_min_distance",
    "brute_nearest",
    "codebook",
    "decode",
    "decode_via_positions",
    "detect_error_count",
    "find_primitive",
    "hamming",
    "mul_ops_total",
    "pgz_decode",
    "recover_codeword_polynomial",
    "report_to_json",
    "run_sweep",
    "solve_locator",
    "vandermonde",
    "__version__",
]
