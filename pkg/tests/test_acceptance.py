"""Acceptance gate: one test per shipping criterion.

Each test prints a single pass/fail line (visible with -v through the
test name, and explicitly with -s). Randomized criteria use fixed
seeds so the gate is reproducible.
"""

import json
import random
import time
from fractions import Fraction
from itertools import combinations, product
from math import factorial

from drchi.cli import run
from drchi.dr_matrix import (
    DRMatrix,
    gl_transform,
    minor,
    reduce_special_form,
)
from drchi.formulas import (
    closed_chi,
    harer_zagier,
    leading_term,
    leading_term_via_partitions,
    power_sum_identity_check,
    rank_one_chi,
)
from drchi.partitions import enumerate_partitions
from drchi.recursion import EvalCache, recursive_chi

from oracles import (
    bell,
    det_permanent_style,
    family_rank2_n3,
    family_rank2_n4,
    family_rank3_n4,
    mat_mul,
    random_dr_rows,
    random_unimodular,
    stirling2,
)
from drchi.exact_math import gcd_list

SEED = 0xD2C1


def _report(num, description):
    print(f"criterion {num:2d} PASS: {description}")


def test_criterion_01_base_values():
    assert closed_chi(DRMatrix([[0]])) == Fraction(-1, 12)
    assert recursive_chi(DRMatrix([[0]])) == Fraction(-1, 12)
    assert rank_one_chi((0,)) == Fraction(-1, 12)
    for n in range(1, 11):
        assert harer_zagier(n) == Fraction((-1) ** n * factorial(n - 1), 12)
    _report(1, "base values -1/12 and the n <= 10 moduli sequence")


def test_criterion_02_rank_one_reconciliation():
    for n in range(1, 6):
        for head in product(range(-3, 4), repeat=n - 1):
            vec = head + (-sum(head),)
            assert closed_chi(DRMatrix([vec])) == rank_one_chi(vec), vec
    _report(2, "closed formula equals vector formula, exhaustive n <= 5")


def test_criterion_03_master_agreement():
    rng = random.Random(SEED)
    start = time.monotonic()
    for _ in range(500):
        r = rng.randint(1, 3)
        n = rng.randint(1, 5)
        matrix = DRMatrix(random_dr_rows(rng, r, n))
        reference = closed_chi(matrix)
        assert recursive_chi(matrix, EvalCache()) == reference, matrix
        assert recursive_chi(matrix, None) == reference, matrix
    elapsed = time.monotonic() - start
    assert elapsed < 300
    _report(3, f"500 random matrices, both methods, memo on and off "
               f"({elapsed:.1f}s)")


def test_criterion_04_intro_families():
    nonzero = [v for v in range(-3, 4) if v != 0]
    for a1, a2 in product(nonzero, nonzero):
        for b1, b2 in product(nonzero, nonzero):
            a3, b3 = -a1 - a2, -b1 - b2
            m = DRMatrix([[a1, a2, a3], [b1, b2, b3]])
            assert closed_chi(m) == family_rank2_n3(a1, a2, a3, b1, b2, b3)
    for a, b in product(nonzero, nonzero):
        m = DRMatrix([[a, -a, 0, 0], [0, 0, b, -b]])
        assert closed_chi(m) == family_rank2_n4(a, b)
    for a, b, c in product(nonzero, nonzero, nonzero):
        m = DRMatrix([[a, -a, 0, 0], [0, b, -b, 0], [0, 0, c, -c]])
        assert closed_chi(m) == family_rank3_n4(a, b, c)
    # worked values
    assert closed_chi(DRMatrix([[1, -1, 0], [0, 1, -1]])) == 0
    assert family_rank2_n4(2, 2) == Fraction(5, 2)
    assert closed_chi(DRMatrix([[2, -2, 0, 0], [0, 0, 2, -2]])) == Fraction(5, 2)
    # unit multiplicities force marking collisions: empty locus
    assert family_rank3_n4(2, 1, 1) == 0
    assert closed_chi(
        DRMatrix([[2, -2, 0, 0], [0, 1, -1, 0], [0, 0, 1, -1]])
    ) == 0
    _report(4, "three family formulas over a,b,c in {-3..3}\\{0} plus "
               "worked values")


def test_criterion_05_gl_invariance():
    rng = random.Random(SEED + 5)
    for _ in range(100):
        r = rng.randint(1, 3)
        n = rng.randint(1, 5)
        matrix = DRMatrix(random_dr_rows(rng, r, n))
        m = random_unimodular(rng, r)
        assert closed_chi(gl_transform(matrix, m)) == closed_chi(matrix)
    _report(5, "closed formula invariant under 100 random unimodular "
               "row actions")


def test_criterion_06_reduction_correctness():
    rng = random.Random(SEED + 6)
    for _ in range(100):
        r = rng.randint(1, 4)
        n = rng.randint(1, 5)
        matrix = DRMatrix(random_dr_rows(rng, r, n, -9, 9))
        res = reduce_special_form(matrix)
        assert det_permanent_style(res.transform) in (1, -1)
        assert mat_mul(res.transform, matrix.entries) == res.reduced.entries
        last_col = [row[-1] for row in res.reduced.entries]
        assert all(e == 0 for e in last_col[1:])
        assert last_col[0] >= 0
        assert last_col[0] == gcd_list([row[-1] for row in matrix.entries])
    _report(6, "100 reductions: unimodular transform, verified product, "
               "special form, pivot = column gcd")


def test_criterion_07_leading_term_equality():
    rng = random.Random(SEED + 7)
    for _ in range(100):
        r = rng.randint(1, 3)
        n = rng.randint(1, 6)
        matrix = DRMatrix(random_dr_rows(rng, r, n))
        assert leading_term(matrix) == leading_term_via_partitions(matrix)
    _report(7, "minor form equals partition form of the top slice, "
               "100 random matrices")


def test_criterion_08_minor_sign_coherence():
    rng = random.Random(SEED + 8)
    for _ in range(100):
        r = rng.randint(1, 4)
        k = rng.randint(0, r)
        matrix = DRMatrix(random_dr_rows(rng, r, k + 1, -6, 6))
        for rows in combinations(range(1, r + 1), k):
            sizes = {
                abs(minor(matrix, rows, cols))
                for cols in combinations(range(1, k + 2), k)
            }
            assert len(sizes) == 1, (matrix, rows, sizes)
    _report(8, "column-deletion minors share one absolute value on 100 "
               "random r x (k+1) matrices")


def test_criterion_09_partition_counts():
    for n in range(1, 9):
        total = 0
        for m in range(1, n + 1):
            count = sum(1 for _ in enumerate_partitions(n, m))
            assert count == stirling2(n, m), (n, m)
            total += count
        assert total == bell(n)
    assert stirling2(4, 2) == 7
    assert bell(4) == 15
    _report(9, "enumeration counts match the Stirling recurrence for "
               "n <= 8 (S(4,2)=7, B4=15)")


def test_criterion_10_power_sum_identity():
    for n in range(2, 6):
        for head in product(range(-3, 4), repeat=n - 1):
            vec = head + (-sum(head),)
            for m in range(1, n):
                lhs, rhs = power_sum_identity_check(vec, m)
                assert lhs == rhs, (vec, m)
    _report(10, "subset power-sum identity, exhaustive n <= 5, all m")


def test_criterion_11_stability():
    rng = random.Random(SEED + 11)
    for _ in range(100):
        r = rng.randint(1, 3)
        n = rng.randint(1, 5)
        matrix = DRMatrix(random_dr_rows(rng, r, n))
        base = closed_chi(matrix)
        assert (12 * base).denominator == 1
        padded = DRMatrix(matrix.entries + ((0,) * n,))
        assert closed_chi(padded) == base
        doubled = DRMatrix(matrix.entries + (matrix.entries[rng.randrange(r)],))
        assert closed_chi(doubled) == base
        cols = list(range(n))
        rng.shuffle(cols)
        permuted = DRMatrix([[row[j] for j in cols] for row in matrix.entries])
        assert closed_chi(permuted) == base
    _report(11, "zero row, duplicate row, column permutation, and 12*chi "
                "integrality on 100 random inputs")


def test_criterion_12_cli_contract(tmp_path, capsys):
    assert run(["--method", "closed", "0"]) == 0
    assert capsys.readouterr().out == "-1/12\n"

    assert run(["--method", "both", "--check", "2 -2 0 0; 0 0 2 -2"]) == 0
    assert capsys.readouterr().out == "5/2\n"

    assert run(["1 0"]) == 1
    assert "row 1 sums to 1" in capsys.readouterr().err

    assert run(["1 -1; 2"]) == 1
    assert "row 2" in capsys.readouterr().err

    rng = random.Random(SEED + 12)
    chunks = []
    for index in range(50):
        if index == 17:
            chunks.append("3 x -3")  # malformed on purpose
            continue
        r = rng.randint(1, 3)
        n = rng.randint(1, 5)
        rows = random_dr_rows(rng, r, n)
        chunks.append("; ".join(" ".join(str(e) for e in row) for row in rows))
    batch = tmp_path / "batch.txt"
    batch.write_text("\n\n".join(chunks) + "\n")
    code = run(["--batch", str(batch), "--json", "--method", "both"])
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 50
    records = [json.loads(line) for line in lines]
    errors = [rec for rec in records if "error" in rec]
    assert len(errors) == 1 and "column" in errors[0]["error"]
    assert all(rec["agree"] for rec in records if "error" not in rec)
    assert code == 1  # the malformed entry surfaces in the exit code
    _report(12, "worked CLI examples bit-exact; 50-entry batch streams 50 "
                "records and survives one malformed entry")
