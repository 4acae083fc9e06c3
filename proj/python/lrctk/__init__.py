"""Locally recoverable erasure codes on m x n symbol arrays.

Thin wrapper over the C++ core: parity-check constructions over GF(2^w),
systematic encoding, two-phase erasure decoding and exhaustive verification
(minimum distance, optimality, PMDS/SD property checks).
"""

from ._core import (
    BudgetExceeded,
    Code,
    Field,
    Matrix,
    build_parity_check,
    check_pmds,
    check_sd,
    code_report,
    distance_at_least,
    ers_matrix,
    is_optimal,
    min_distance,
    mod_reduce,
    parse_matrix,
    rs_matrix,
    singleton_bound,
    special_bound,
    xor_collapse,
)

__all__ = [
    "BudgetExceeded",
    "Code",
    "Field",
    "Matrix",
    "build_parity_check",
    "check_pmds",
    "check_sd",
    "code_report",
    "distance_at_least",
    "ers_matrix",
    "is_optimal",
    "min_distance",
    "mod_reduce",
    "parse_matrix",
    "rs_matrix",
    "singleton_bound",
    "special_bound",
    "xor_collapse",
]
