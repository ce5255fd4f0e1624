"""Exact orbifold Euler characteristics of genus-one DR loci.

Input data is an integer matrix with zero-sum rows; each row imposes a
double ramification condition on n marked points of a genus-one curve.
Two independent evaluators are provided: a closed partition/gcd sum
(closed_chi) and a degeneration recurrence (recursive_chi). They must
agree exactly, which cross_validate checks. All arithmetic is exact.
"""

from .dr_matrix import (
    DRMatrix,
    ReductionResult,
    canonical_key,
    contract,
    determinant,
    gcd_minors,
    gl_transform,
    minor,
    reduce_special_form,
)
from .exact_math import ExactRational, factorial, gcd_list
from .formulas import (
    closed_chi,
    harer_zagier,
    leading_term,
    leading_term_via_partitions,
    power_sum_identity_check,
    rank_one_chi,
)
from .partitions import SetPartition, block_factorial_weight, enumerate_partitions
from .recursion import (
    EvalCache,
    EvalReport,
    branch_vector,
    cross_validate,
    recursive_chi,
)

__version__ = "0.1.0"

__all__ = [
    "DRMatrix",
    "EvalCache",
    "EvalReport",
    "ExactRational",
    "ReductionResult",
    "SetPartition",
    "block_factorial_weight",
    "branch_vector",
    "canonical_key",
    "closed_chi",
    "contract",
    "cross_validate",
    "determinant",
    "enumerate_partitions",
    "factorial",
    "gcd_list",
    "gcd_minors",
    "gl_transform",
    "harer_zagier",
    "leading_term",
    "leading_term_via_partitions",
    "minor",
    "power_sum_identity_check",
    "rank_one_chi",
    "recursive_chi",
    "reduce_special_form",
]
