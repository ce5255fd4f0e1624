import pytest
from hypothesis import given, settings, strategies as st

from drchi.partitions import (
    SetPartition,
    block_factorial_weight,
    enumerate_partitions,
)

from oracles import bell, brute_partitions, stirling2


def blocks_of(partition):
    return tuple(tuple(b) for b in partition.blocks)


def test_set_partition_canonical_order():
    p = SetPartition([[3], [2, 1]], 3)
    assert blocks_of(p) == ((1, 2), (3,))
    assert len(p) == 2
    assert list(p) == [(1, 2), (3,)]


def test_set_partition_equality_and_hash():
    p = SetPartition([[1, 2], [3]], 3)
    q = SetPartition([[3], [2, 1]], 3)
    assert p == q
    assert hash(p) == hash(q)
    assert p != SetPartition([[1, 3], [2]], 3)


def test_set_partition_validation():
    with pytest.raises(ValueError):
        SetPartition([[1], [1, 2]], 2)  # duplicate element
    with pytest.raises(ValueError):
        SetPartition([[1]], 2)  # does not cover
    with pytest.raises(ValueError):
        SetPartition([[1], [3]], 2)  # out of range
    with pytest.raises(ValueError):
        SetPartition([[1], []], 1)  # empty block
    with pytest.raises(ValueError):
        SetPartition([], 1)


def test_block_factorial_weight():
    assert block_factorial_weight(SetPartition([[1, 2, 3, 4]], 4)) == 6
    assert block_factorial_weight(SetPartition([[1, 2], [3, 4]], 4)) == 1
    assert block_factorial_weight(SetPartition([[1], [2], [3]], 3)) == 1
    assert block_factorial_weight(SetPartition([[1, 2, 3], [4, 5]], 5)) == 2


def test_enumeration_order_n3():
    got = [blocks_of(p) for p in enumerate_partitions(3, 2)]
    assert got == [
        ((1, 2), (3,)),
        ((1, 3), (2,)),
        ((1,), (2, 3)),
    ]


def test_enumeration_matches_brute_force():
    for n in range(1, 7):
        for m in range(1, n + 1):
            mine = sorted(blocks_of(p) for p in enumerate_partitions(n, m))
            brute = sorted(brute_partitions(n, m))
            assert mine == brute, (n, m)


def test_enumeration_counts_are_stirling():
    for n in range(1, 9):
        total = 0
        for m in range(1, n + 1):
            count = sum(1 for _ in enumerate_partitions(n, m))
            assert count == stirling2(n, m), (n, m)
            total += count
        assert total == bell(n)


def test_enumeration_out_of_range_is_empty():
    assert list(enumerate_partitions(3, 0)) == []
    assert list(enumerate_partitions(3, 4)) == []
    with pytest.raises(ValueError):
        list(enumerate_partitions(0, 1))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7))
def test_enumeration_yields_valid_partitions(n, m):
    seen = set()
    for p in enumerate_partitions(n, m):
        assert p.n == n
        assert len(p) == m
        flat = sorted(i for block in p.blocks for i in block)
        assert flat == list(range(1, n + 1))
        assert p not in seen  # no duplicates
        seen.add(p)
