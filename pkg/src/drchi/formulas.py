"""Closed-form evaluation of genus-one orbifold Euler characteristics.

The base quantity is chi of the moduli space of n-marked genus-one
curves, (-1)^n (n-1)!/12. Imposing r double ramification conditions,
encoded by an r x n zero-row-sum integer matrix A, cuts a locus whose
chi is given by a finite sum over set partitions of the marking set:

    chi = (-1)^n / 12 * sum_{k=0}^{r} (-1)^k
          sum_{partitions of [n] into k+1 blocks}
              prod_blocks (|block| - 1)! * G_k(A_contracted)^2

where A_contracted sums the columns of each block and G_k is the gcd
of its k x k minors (G_0 = 1). For a single condition the sum
collapses to the explicit vector formula of rank_one_chi; the top
k = r slice simplifies further to a sum of squared maximal minors
(leading_term). Everything is exact rational arithmetic.
"""

from __future__ import annotations

import operator
from itertools import combinations
from math import comb

from .dr_matrix import DRMatrix, contract, gcd_minors, minor
from .exact_math import ExactRational, factorial
from .partitions import block_factorial_weight, enumerate_partitions

__all__ = [
    "closed_chi",
    "harer_zagier",
    "leading_term",
    "leading_term_via_partitions",
    "power_sum_identity_check",
    "rank_one_chi",
]


def harer_zagier(n: int) -> ExactRational:
    """chi of the moduli space of n-marked genus-one curves.

    Exact value (-1)^n (n-1)!/12 for n >= 1; the n = 1 case is the
    classical -1/12.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    value = factorial(n - 1)
    if n % 2:
        value = -value
    return ExactRational(value, 12)


def rank_one_chi(a) -> ExactRational:
    """chi of the locus cut by a single ramification vector a.

    For a zero-sum integer vector of length n the value is

        (-1)^(n-1) (n-1)!/24 * (sum a_i^2 - 2).

    The all-zero vector of length 1 imposes nothing and recovers
    harer_zagier(1) = -1/12.
    """
    vec = tuple(operator.index(e) for e in a)
    if not vec:
        raise ValueError("vector needs at least one entry")
    total = sum(vec)
    if total != 0:
        raise ValueError(f"vector sums to {total}, expected 0")
    n = len(vec)
    value = factorial(n - 1) * (sum(e * e for e in vec) - 2)
    if n % 2 == 0:
        value = -value
    return ExactRational(value, 24)


def closed_chi(matrix: DRMatrix) -> ExactRational:
    """chi of the rank-r locus of a DR matrix, by the partition sum.

    Streams set partitions of the column set into k+1 blocks for
    k = 0..r, contracts the matrix along each partition, and weights
    the squared gcd of k x k minors by the product of factorials of
    block sizes minus one. Partitions need at least k+1 <= n columns,
    so slices with k >= n vanish and are skipped outright. The sum is
    accumulated as a single integer over the fixed denominator 12.
    """
    r, n = matrix.r, matrix.n
    acc = 0
    for k in range(min(r, n - 1) + 1):
        sign = -1 if k % 2 else 1
        for part in enumerate_partitions(n, k + 1):
            g = gcd_minors(contract(matrix, part), k)
            acc += sign * block_factorial_weight(part) * g * g
    if n % 2:
        acc = -acc
    return ExactRational(acc, 12)


def leading_term(matrix: DRMatrix) -> ExactRational:
    """Top slice of the partition sum, as squared maximal minors.

    Equals (-1)^(n+r)/12 * (n-1)!/(r+1)! times the sum of the squared
    r x r minors over all r-element column subsets. Vanishes whenever
    n <= r: for n < r there are no subsets, and for n = r the single
    minor is the determinant of a matrix annihilating the all-ones
    vector.
    """
    r, n = matrix.r, matrix.n
    all_rows = range(1, r + 1)
    total = 0
    for cols in combinations(range(1, n + 1), r):
        m = minor(matrix, all_rows, cols)
        total += m * m
    value = factorial(n - 1) * total
    if (n + r) % 2:
        value = -value
    return ExactRational(value, 12 * factorial(r + 1))


def leading_term_via_partitions(matrix: DRMatrix) -> ExactRational:
    """The k = r slice of closed_chi, evaluated literally.

    Provided for equality testing against leading_term, which computes
    the same quantity without enumerating partitions. Returns 0 when
    n < r + 1 (no partitions of that length exist).
    """
    r, n = matrix.r, matrix.n
    acc = 0
    for part in enumerate_partitions(n, r + 1):
        g = gcd_minors(contract(matrix, part), r)
        acc += block_factorial_weight(part) * g * g
    if (n + r) % 2:
        acc = -acc
    return ExactRational(acc, 12)


def power_sum_identity_check(a, m: int):
    """Both sides of the subset power-sum identity for zero-sum vectors.

    For a zero-sum vector a of length n and 1 <= m <= n-1,

        sum_{|I| = m} (sum_{i in I} a_i)^2  =  C(n-2, m-1) * sum a_i^2.

    Returns (lhs, rhs) computed independently: the left by subset
    enumeration, the right by the binomial formula. Callers compare.
    """
    vec = tuple(operator.index(e) for e in a)
    n = len(vec)
    total = sum(vec)
    if total != 0:
        raise ValueError(f"vector sums to {total}, expected 0")
    if not 1 <= m <= n - 1:
        raise ValueError(f"m must lie in 1..{n - 1}, got {m}")
    lhs = 0
    for subset in combinations(vec, m):
        s = sum(subset)
        lhs += s * s
    rhs = comb(n - 2, m - 1) * sum(e * e for e in vec)
    return lhs, rhs
