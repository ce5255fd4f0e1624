"""Double ramification matrices and their exact linear algebra.

A double ramification matrix is an r x n integer matrix each of whose
rows sums to zero; row j records the multiplicities of one ramification
condition on n marked points. This module provides the matrix type plus
the operations the Euler-characteristic formulas consume: exact minors,
gcds of minors, column contractions along a set partition, row action
by unimodular matrices, and the unimodular reduction that zeroes the
last column below the first row.

All arithmetic is exact; determinants use cofactor expansion for sizes
up to 3 and fraction-free Bareiss elimination beyond that. Row and
column index sets in the public API are 1-based, matching the marking
labels 1..n used by set partitions.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .partitions import SetPartition

__all__ = [
    "DRMatrix",
    "ReductionResult",
    "canonical_key",
    "contract",
    "determinant",
    "gcd_minors",
    "gl_transform",
    "minor",
    "reduce_special_form",
]


class DRMatrix:
    """An r x n integer matrix whose rows each sum to zero.

    Immutable after construction; construction validates the defining
    row-sum property and reports the first offending row (1-based).
    """

    __slots__ = ("entries",)

    def __init__(self, rows):
        entries = tuple(tuple(operator.index(e) for e in row) for row in rows)
        if not entries:
            raise ValueError("matrix needs at least one row")
        width = len(entries[0])
        if width == 0:
            raise ValueError("matrix needs at least one column")
        for index, row in enumerate(entries, start=1):
            if len(row) != width:
                raise ValueError(
                    f"row {index} has {len(row)} entries, expected {width}"
                )
            total = sum(row)
            if total != 0:
                raise ValueError(f"row {index} sums to {total}, expected 0")
        object.__setattr__(self, "entries", entries)

    @property
    def r(self) -> int:
        """Number of rows (the rank of the imposed conditions)."""
        return len(self.entries)

    @property
    def n(self) -> int:
        """Number of columns (the number of markings)."""
        return len(self.entries[0])

    def __setattr__(self, name, value):
        raise AttributeError("DRMatrix is immutable")

    def __eq__(self, other):
        if not isinstance(other, DRMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        rows = ", ".join("[%s]" % ", ".join(map(str, row)) for row in self.entries)
        return f"DRMatrix([{rows}])"


@dataclass(frozen=True)
class ReductionResult:
    """A unimodular row transform and the transformed matrix.

    ``reduced`` equals ``transform @ original``; its last column is zero
    below the first row and its top-right entry is the (nonnegative)
    gcd of the original last column.
    """

    transform: tuple
    reduced: DRMatrix


def determinant(rows) -> int:
    """Exact determinant of a square integer matrix (tuple/list rows).

    The empty 0 x 0 matrix has determinant 1.
    """
    mat = [list(row) for row in rows]
    size = len(mat)
    if any(len(row) != size for row in mat):
        raise ValueError("determinant needs a square matrix")
    if size == 0:
        return 1
    if size == 1:
        return mat[0][0]
    if size == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if size == 3:
        (a, b, c), (d, e, f), (g, h, i) = mat
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    # Bareiss fraction-free elimination: every division below is exact.
    sign = 1
    prev = 1
    for k in range(size - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, size):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = mat[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                mat[i][j] = (pivot * mat[i][j] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = pivot
    return sign * mat[-1][-1]


def minor(matrix, rows, cols) -> int:
    """Determinant of the submatrix on the given 1-based index sets.

    ``matrix`` may be a DRMatrix or any rectangular integer matrix.
    Equal-size sets of distinct in-range indices are required; both are
    sorted ascending before the determinant is taken. Empty sets give
    the empty determinant, 1.
    """
    entries = matrix.entries if isinstance(matrix, DRMatrix) else tuple(
        tuple(row) for row in matrix
    )
    row_ids = sorted(rows)
    col_ids = sorted(cols)
    if len(row_ids) != len(col_ids):
        raise ValueError(
            f"need equal-size index sets, got {len(row_ids)} rows, {len(col_ids)} cols"
        )
    if len(set(row_ids)) != len(row_ids) or len(set(col_ids)) != len(col_ids):
        raise ValueError("index sets must not repeat indices")
    height, width = len(entries), len(entries[0])
    if row_ids and not (1 <= row_ids[0] and row_ids[-1] <= height):
        raise ValueError(f"row indices {row_ids} out of range 1..{height}")
    if col_ids and not (1 <= col_ids[0] and col_ids[-1] <= width):
        raise ValueError(f"column indices {col_ids} out of range 1..{width}")
    sub = [[entries[i - 1][j - 1] for j in col_ids] for i in row_ids]
    return determinant(sub)


def gcd_minors(matrix: DRMatrix, k: int) -> int:
    """Nonnegative gcd of all k x k minors of the matrix.

    Conventions: 1 for k = 0; vanishing minors are dropped; 0 when all
    minors vanish. Stops early once the running gcd reaches 1.
    """
    if not 0 <= k <= min(matrix.r, matrix.n):
        raise ValueError(
            f"k must lie in 0..{min(matrix.r, matrix.n)}, got {k}"
        )
    if k == 0:
        return 1
    entries = matrix.entries
    running = 0
    for row_ids in combinations(range(matrix.r), k):
        for col_ids in combinations(range(matrix.n), k):
            sub = [[entries[i][j] for j in col_ids] for i in row_ids]
            running = gcd(running, determinant(sub))
            if running == 1:
                return 1
    return running


def contract(matrix: DRMatrix, partition: SetPartition) -> DRMatrix:
    """Sum the columns of each partition block into a single column.

    Returns an r x len(partition) matrix; columns follow the canonical
    block order (ascending block minima). Row sums stay zero, so the
    result is again a valid DRMatrix.
    """
    if partition.n != matrix.n:
        raise ValueError(
            f"partition of {partition.n} elements does not fit {matrix.n} columns"
        )
    rows = [
        tuple(sum(row[i - 1] for i in block) for block in partition.blocks)
        for row in matrix.entries
    ]
    return DRMatrix(rows)


def gl_transform(matrix: DRMatrix, transform) -> DRMatrix:
    """Left-multiply by an r x r unimodular integer matrix.

    Row operations preserve the zero-row-sum property, so the product
    is again a DRMatrix. Raises if the transform is not square of the
    right size or its determinant is not +-1.
    """
    trans = tuple(tuple(operator.index(e) for e in row) for row in transform)
    if len(trans) != matrix.r or any(len(row) != matrix.r for row in trans):
        raise ValueError(f"transform must be {matrix.r}x{matrix.r}")
    det = determinant(trans)
    if det not in (1, -1):
        raise ValueError(f"transform determinant is {det}, expected +-1")
    return DRMatrix(_mat_mul(trans, matrix.entries))


def reduce_special_form(matrix: DRMatrix) -> ReductionResult:
    """Clear the last column below the first row by unimodular row moves.

    Iterated two-row extended-gcd elimination against row 1 zeroes the
    last entry of every other row; a final sign fix makes the surviving
    pivot nonnegative, so it equals the gcd of the original last column
    (0 if that column is zero). Returns the accumulated transform M and
    the reduced matrix M @ A.
    """
    rows = [list(row) for row in matrix.entries]
    size = matrix.r
    trans = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    last = matrix.n - 1
    for j in range(1, size):
        if rows[j][last] == 0:
            continue
        g, p, q = _xgcd(rows[0][last], rows[j][last])
        u, v = -rows[j][last] // g, rows[0][last] // g
        # [[p, q], [u, v]] has determinant (p*a + q*b)/g = 1.
        rows[0], rows[j] = (
            [p * a + q * b for a, b in zip(rows[0], rows[j])],
            [u * a + v * b for a, b in zip(rows[0], rows[j])],
        )
        trans[0], trans[j] = (
            [p * a + q * b for a, b in zip(trans[0], trans[j])],
            [u * a + v * b for a, b in zip(trans[0], trans[j])],
        )
    if rows[0][last] < 0:
        rows[0] = [-a for a in rows[0]]
        trans[0] = [-a for a in trans[0]]
    return ReductionResult(
        transform=tuple(tuple(row) for row in trans),
        reduced=DRMatrix(rows),
    )


def canonical_key(matrix: DRMatrix) -> bytes:
    """Deterministic byte serialization of (r, n, entries).

    Structurally equal matrices map to equal keys; any entry or shape
    change (including a column swap) changes the key. Format:
    ``b"r,n:e11,e12,...,ern"`` in row-major order, so the 1 x 1 zero
    matrix serializes to ``b"1,1:0"``. Used as the memoization key for
    the recursive evaluator.
    """
    flat = ",".join(str(e) for row in matrix.entries for e in row)
    return f"{matrix.r},{matrix.n}:{flat}".encode("ascii")


def _mat_mul(left, right):
    """Rows-of-tuples product of integer matrices."""
    width = len(right[0])
    inner = len(right)
    return tuple(
        tuple(sum(row[k] * right[k][j] for k in range(inner)) for j in range(width))
        for row in left
    )


def _xgcd(a: int, b: int):
    """(g, p, q) with p*a + q*b = g = gcd(a, b) >= 0 (g > 0 unless a = b = 0)."""
    g, next_g = a, b
    p, next_p = 1, 0
    q, next_q = 0, 1
    while next_g:
        quot = g // next_g
        g, next_g = next_g, g - quot * next_g
        p, next_p = next_p, p - quot * next_p
        q, next_q = next_q, q - quot * next_q
    if g < 0:
        g, p, q = -g, -p, -q
    return g, p, q
