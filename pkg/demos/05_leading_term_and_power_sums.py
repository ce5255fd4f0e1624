"""The top slice of the formula, and the identity behind rank one.

The k = r slice of the partition sum simplifies: instead of contracted
gcds it only needs the r x r minors of the original matrix,

    L = (-1)^(n+r)/12 * (n-1)!/(r+1)! * sum_{|I| = r} M_I(A)^2.

This script checks the two forms against each other, and demonstrates
the subset power-sum identity for zero-sum vectors that reconciles the
vector formula with the matrix formula in rank one:

    sum_{|I| = m} a_I^2 = C(n-2, m-1) * sum a_i^2.
"""

import random

from drchi import (
    DRMatrix,
    leading_term,
    leading_term_via_partitions,
    power_sum_identity_check,
)

print("leading term, two ways:")
samples = [
    DRMatrix([[1, -1]]),
    DRMatrix([[1, -1, 0], [0, 1, -1]]),
    DRMatrix([[2, -2, 0, 0], [0, 0, 2, -2]]),
    DRMatrix([[1, 2, -3, 0], [0, 1, 0, -1]]),
]
for matrix in samples:
    fast = leading_term(matrix)
    slow = leading_term_via_partitions(matrix)
    assert fast == slow
    print(f"  {matrix}: minors {fast} == partitions {slow}")

print()
print("the slice vanishes when there are too few markings (n <= r):")
tiny = DRMatrix([[1, -1], [2, -2]])
print(f"  {tiny}: leading term = {leading_term(tiny)}")

print()
print("power sums of subset totals, zero-sum vector a = (3, -1, -1, -1):")
vec = (3, -1, -1, -1)
for m in range(1, len(vec)):
    lhs, rhs = power_sum_identity_check(vec, m)
    print(f"  m = {m}: subset enumeration {lhs} == binomial formula {rhs}")

print()
print("and on random zero-sum vectors:")
rng = random.Random(11)
for _ in range(4):
    n = rng.randint(2, 7)
    head = [rng.randint(-5, 5) for _ in range(n - 1)]
    vec = tuple(head + [-sum(head)])
    checks = [power_sum_identity_check(vec, m) for m in range(1, n)]
    assert all(lhs == rhs for lhs, rhs in checks)
    print(f"  {vec}: identity holds for every m in 1..{n - 1}")
