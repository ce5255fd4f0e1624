"""The higher-rank closed formula, term by term.

Several simultaneous conditions are packaged as an r x n matrix with
zero-sum rows. The Euler characteristic is a signed sum over set
partitions of the columns: each partition contracts the matrix, and
the gcd of the k x k minors of the contraction enters squared,

    chi = (-1)^n / 12 * sum_k (-1)^k
          sum_{partitions into k+1 blocks} prod(|block|-1)! * G_k^2.

This script expands the sum for one matrix so every term is visible.
"""

from drchi import (
    DRMatrix,
    block_factorial_weight,
    closed_chi,
    contract,
    enumerate_partitions,
    gcd_minors,
)

matrix = DRMatrix([[2, -2, 0, 0], [0, 0, 2, -2]])
r, n = matrix.r, matrix.n
print(f"matrix: {matrix}")
print(f"rank r = {r}, markings n = {n}")
print()

acc = 0
for k in range(min(r, n - 1) + 1):
    sign = (-1) ** k
    print(f"k = {k} (partitions into {k + 1} blocks, sign {sign:+d}):")
    slice_total = 0
    for part in enumerate_partitions(n, k + 1):
        cont = contract(matrix, part)
        weight = block_factorial_weight(part)
        g = gcd_minors(cont, k)
        term = weight * g * g
        slice_total += term
        blocks = " ".join("{" + ",".join(map(str, b)) + "}" for b in part.blocks)
        print(f"  {blocks:24s} weight {weight}  G = {g}  term {term}")
    acc += sign * slice_total
    print(f"  slice total: {slice_total}")
    print()

total = (-1) ** n * acc
print(f"signed sum: {acc}, times (-1)^n = {total}, divided by 12:")
print(f"  chi = {total}/12 = {closed_chi(matrix)}")

from fractions import Fraction

assert closed_chi(matrix) == Fraction(total, 12)
