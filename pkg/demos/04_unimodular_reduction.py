"""Row lattices, unimodular moves, and the special form.

Two matrices with the same row lattice cut the same locus, so chi only
depends on the matrix up to left multiplication by an invertible
integer matrix. The recursion exploits this: a sequence of two-row gcd
eliminations clears the last column below the first row, leaving a
"special form" whose pivot is the gcd of the original last column.
"""

from drchi import (
    DRMatrix,
    closed_chi,
    gl_transform,
    reduce_special_form,
)

matrix = DRMatrix([[3, -3], [6, -6]])
result = reduce_special_form(matrix)
print(f"matrix   {matrix}")
print(f"transform rows: {result.transform}")
print(f"reduced  {result.reduced}")
print("the pivot 3 is gcd(-3, -6), and the second row collapsed to zero")
print()

matrix = DRMatrix([[1, 2, -3, 0], [0, 1, 0, -1], [2, -1, -1, 0]])
result = reduce_special_form(matrix)
print(f"matrix   {matrix}")
print(f"reduced  {result.reduced}")
column = [row[-1] for row in result.reduced.entries]
print(f"last column after reduction: {column}")
print()

print("chi is blind to unimodular row moves:")
base = closed_chi(matrix)
moves = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
    [[0, 1, 0], [1, 0, 0], [5, 0, -1]],
    [[1, 0, 0], [2, -1, 0], [3, 0, 1]],
]
for move in moves:
    value = closed_chi(gl_transform(matrix, move))
    marker = "ok" if value == base else "MISMATCH"
    print(f"  transform {move}: chi = {value}  {marker}")
