"""Exact arithmetic shared by the whole package.

Everything downstream is integer or rational: the Euler characteristics
are rationals with denominator dividing 24, while the matrix work
(minors, gcds, factorial weights) is pure integer arithmetic. Python
integers are already arbitrary precision, so this module is thin -- it
pins down the gcd conventions the formulas rely on and puts stable
names on the stdlib building blocks.

Conventions:

* ``gcd_list([]) == 0`` -- the gcd of nothing is zero.
* Zero entries are dropped: ``gcd_list([0, 0, 5, 0]) == 5``.
* Gcds are always nonnegative. Only squares of gcds enter the
  formulas, so the sign choice is invisible there, but fixing it keeps
  every result deterministic.

Rational values are ``fractions.Fraction``: stored reduced with a
positive denominator, so equality is structural. No division is needed
anywhere in the package; sums, products, integer scaling and negation
are the whole rational vocabulary.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["ExactRational", "factorial", "gcd_list"]

# Every chi value in the package is one of these.
ExactRational = Fraction


def gcd_list(values) -> int:
    """Nonnegative gcd of the given integers, zeros dropped.

    Returns 0 for an empty list and for an all-zero list. Permutation-
    and sign-invariant in the entries.
    """
    return math.gcd(*values)


def factorial(m: int) -> int:
    """m! for m >= 0."""
    return math.factorial(m)
