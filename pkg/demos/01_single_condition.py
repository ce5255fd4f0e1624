"""A single ramification condition: the vector formula.

A zero-sum integer vector a = (a_1, ..., a_n) cuts out, inside the
moduli space of n-marked genus-one curves, the locus where the divisor
sum a_i p_i is linearly trivial. Its orbifold Euler characteristic has
the closed form

    (-1)^(n-1) (n-1)!/24 * (sum a_i^2 - 2)

and this script walks through what the formula says in small cases.
"""

from drchi import DRMatrix, closed_chi, harer_zagier, rank_one_chi

print("The unimposed moduli spaces, for scale:")
for n in range(1, 6):
    print(f"  chi(M_1,{n}) = {harer_zagier(n)}")

print()
print("One marked point, the empty condition a = (0):")
print(f"  rank_one_chi((0,)) = {rank_one_chi((0,))}   (all of M_1,1)")

print()
print("Two points with opposite multiplicities a = (d, -d):")
print("  the locus is a degree d^2 - 1 cover of M_1,1, so chi scales:")
for d in range(1, 5):
    value = rank_one_chi((d, -d))
    print(f"  d = {d}: chi = {value}  (= (d^2 - 1) * -1/12)")

print()
print("d = 1 forces the two markings to collide, hence the empty locus")
print("and chi = 0 above.")

print()
print("A three-point example a = (1, 1, -2):")
print(f"  rank_one_chi((1, 1, -2)) = {rank_one_chi((1, 1, -2))}")

print()
print("The same values come out of the general matrix engine:")
for vec in [(0,), (3, -3), (1, 1, -2), (2, -1, -1, 0)]:
    matrix = DRMatrix([vec])
    assert closed_chi(matrix) == rank_one_chi(vec)
    print(f"  closed_chi({list(vec)}) = {closed_chi(matrix)}")
