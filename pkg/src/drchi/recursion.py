"""Recursive evaluation of chi by degeneration, independent of formulas.

The locus of an r x (n+1) matrix in special form (last column zero
below row 1, pivot p = top-right entry) fibers over the rank r-1 locus
of the bottom-left block B, away from the loci where the last marking
collides with an earlier one. Comparing Euler characteristics gives

    chi(A) = p^2 * chi(B) - sum_{i=1}^{n} chi([a(i); B])

where a(i) merges the last entry of the top row into entry i. Rank-one
inputs satisfy the same recurrence with chi(B) read as the unimposed
moduli space value, and need no reduction. The recurrence holds
verbatim when p = 0 (the first term drops and each a(i) is a
truncation), so it is applied uniformly. Every step shrinks (r, n)
lexicographically and n = 1 forces the zero matrix, whose locus is the
whole one-marked moduli space with chi = -1/12; recursion depth is at
most n + r.

Values here must agree exactly with formulas.closed_chi on every
input; cross_validate packages that comparison.
"""

from __future__ import annotations

import operator
import time
from dataclasses import dataclass, field

from .dr_matrix import DRMatrix, canonical_key, reduce_special_form
from .exact_math import ExactRational
from .formulas import closed_chi, harer_zagier, rank_one_chi

__all__ = [
    "EvalCache",
    "EvalReport",
    "branch_vector",
    "cross_validate",
    "recursive_chi",
]


class EvalCache:
    """Write-once memo of chi values keyed by canonical matrix bytes.

    Tracks hits and misses; a second insert under an existing key must
    carry the same value.
    """

    __slots__ = ("_store", "hits", "misses")

    def __init__(self):
        self._store = {}
        self.hits = 0
        self.misses = 0

    def get(self, key: bytes):
        value = self._store.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key: bytes, value: ExactRational) -> None:
        known = self._store.setdefault(key, value)
        if known != value:
            raise ValueError(f"conflicting cache values under key {key!r}")

    def __len__(self) -> int:
        return len(self._store)


@dataclass
class EvalReport:
    """Outcome of evaluating one matrix by several methods.

    ``values`` and ``timings_ms`` are keyed by method name ("closed",
    "recursion", "rank1"); ``agree`` is true iff all values coincide.
    Cache counters describe the recursion's memo.
    """

    matrix: DRMatrix
    values: dict = field(default_factory=dict)
    timings_ms: dict = field(default_factory=dict)
    agree: bool = True
    cache_hits: int = 0
    cache_misses: int = 0


def branch_vector(a, i: int):
    """Merge the last entry of a into position i (1-based).

    For a of length n+1 returns the length-n vector
    (a_1, ..., a_{i-1}, a_i + a_{n+1}, a_{i+1}, ..., a_n); zero-sum
    inputs give zero-sum outputs.
    """
    vec = tuple(operator.index(e) for e in a)
    n = len(vec) - 1
    if not 1 <= i <= n:
        raise ValueError(f"index must lie in 1..{n}, got {i}")
    return vec[: i - 1] + (vec[i - 1] + vec[n],) + vec[i:n]


def recursive_chi(matrix: DRMatrix, cache: EvalCache | None = None) -> ExactRational:
    """chi of a DR matrix by the degeneration recurrence.

    Rank-one inputs recurse on the raw vector; higher ranks are first
    put in special form, which is also what the optional cache keys on.
    Passing no cache re-derives every subproblem (the tree then has on
    the order of n! leaves, so keep uncached runs to r <= 3, n <= 7).
    """
    return _eval(matrix, cache)


def cross_validate(matrix: DRMatrix) -> EvalReport:
    """Evaluate by every applicable method and compare exactly.

    Runs closed_chi and recursive_chi (with a fresh cache) on any
    input, plus rank_one_chi when the matrix has a single row.
    Disagreement is reported in the ``agree`` flag, never raised.
    """
    report = EvalReport(matrix=matrix)

    start = time.perf_counter()
    report.values["closed"] = closed_chi(matrix)
    report.timings_ms["closed"] = (time.perf_counter() - start) * 1000.0

    cache = EvalCache()
    start = time.perf_counter()
    report.values["recursion"] = recursive_chi(matrix, cache)
    report.timings_ms["recursion"] = (time.perf_counter() - start) * 1000.0
    report.cache_hits = cache.hits
    report.cache_misses = cache.misses

    if matrix.r == 1:
        start = time.perf_counter()
        report.values["rank1"] = rank_one_chi(matrix.entries[0])
        report.timings_ms["rank1"] = (time.perf_counter() - start) * 1000.0

    report.agree = len(set(report.values.values())) == 1
    return report


def _eval(matrix: DRMatrix, cache: EvalCache | None) -> ExactRational:
    if matrix.n == 1:
        # Single zero column: nothing is imposed on the one marking.
        return harer_zagier(1)
    if matrix.r == 1:
        return _eval_vector(matrix.entries[0], cache)
    reduced = reduce_special_form(matrix).reduced
    key = canonical_key(reduced)
    if cache is not None:
        known = cache.get(key)
        if known is not None:
            return known
    n = reduced.n
    top = reduced.entries[0]
    bottom = tuple(row[:-1] for row in reduced.entries[1:])
    pivot = top[-1]
    value = ExactRational(0)
    if pivot:
        value += pivot * pivot * _eval(DRMatrix(bottom), cache)
    for i in range(1, n):
        value -= _eval(DRMatrix((branch_vector(top, i),) + bottom), cache)
    if cache is not None:
        cache.put(key, value)
    return value


def _eval_vector(vec, cache: EvalCache | None) -> ExactRational:
    n = len(vec)
    if n == 1:
        return harer_zagier(1)
    key = canonical_key(DRMatrix((vec,)))
    if cache is not None:
        known = cache.get(key)
        if known is not None:
            return known
    last = vec[-1]
    value = ExactRational(0)
    if last:
        value += last * last * harer_zagier(n - 1)
    for i in range(1, n):
        value -= _eval_vector(branch_vector(vec, i), cache)
    if cache is not None:
        cache.put(key, value)
    return value
