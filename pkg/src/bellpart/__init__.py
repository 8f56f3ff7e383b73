"""Exact Bell and second-kind Stirling numbers of types classical, B and D,
with a brute-force enumeration oracle, exact-rational generating functions
and rigorous interval evaluation of the explicit formulas."""

from bellpart.triangles import (
    Family,
    IdentityReport,
    Triangle,
    bell,
    bell_a,
    bell_b,
    bell_d,
    binomial,
    stirling,
    stirling2,
    stirling_b,
    stirling_d,
    verify_identity,
)
from bellpart.partitions import (
    ClassicalSetPartition,
    SignedSetPartition,
    canonicalize,
    classify,
    count_by_pairs,
    count_single_positive_zero_block,
    enum_classical,
    enum_signed,
)
from bellpart.series import TruncatedSeries, egf_coefficients, egf_stirling_d_column
from bellpart.dobinski import Interval, dobinski_a, dobinski_b, dobinski_d, exp_neg_bounds
from bellpart.kernels import IMPL as KERNEL_IMPL

__version__ = "0.1.0"

__all__ = [
    "Family",
    "IdentityReport",
    "Triangle",
    "bell",
    "bell_a",
    "bell_b",
    "bell_d",
    "binomial",
    "stirling",
    "stirling2",
    "stirling_b",
    "stirling_d",
    "verify_identity",
    "ClassicalSetPartition",
    "SignedSetPartition",
    "canonicalize",
    "classify",
    "count_by_pairs",
    "count_single_positive_zero_block",
    "enum_classical",
    "enum_signed",
    "TruncatedSeries",
    "egf_coefficients",
    "egf_stirling_d_column",
    "Interval",
    "dobinski_a",
    "dobinski_b",
    "dobinski_d",
    "exp_neg_bounds",
    "KERNEL_IMPL",
]
