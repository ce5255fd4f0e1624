"""Set partitions of {1, ..., n} with a prescribed number of blocks.

The closed-formula evaluator sums over all partitions of the marking
set into k+1 blocks, for each k up to the rank, so enumeration must be
cheap and streaming. Partitions are produced one at a time from a
restricted growth string mutated in place: O(n) working state per
iterator, no materialised list.

A restricted growth string (RGS) encodes a partition by assigning each
element the index of its block, blocks numbered in order of first
appearance: c[0] = 0 and c[i] <= max(c[0..i-1]) + 1. Partitions into
exactly m blocks are the strings with maximum value m-1. The stream is
in lexicographic RGS order, which also means blocks come out sorted by
their minimum element.
"""

from __future__ import annotations

from typing import Iterator

from .exact_math import factorial

__all__ = ["SetPartition", "block_factorial_weight", "enumerate_partitions"]


class SetPartition:
    """A partition of {1, ..., n} into nonempty disjoint blocks.

    Blocks are stored sorted internally and ordered by their minimum
    element, so structurally equal partitions compare and hash equal.
    """

    __slots__ = ("blocks", "n")

    def __init__(self, blocks, n: int):
        if n < 1:
            raise ValueError(f"ground set size must be >= 1, got {n}")
        normalized = []
        seen = set()
        for block in blocks:
            members = tuple(sorted(block))
            if not members:
                raise ValueError("empty block")
            if len(set(members)) != len(members):
                raise ValueError(f"repeated element in block {members}")
            if members[0] < 1 or members[-1] > n:
                raise ValueError(f"block {members} not within 1..{n}")
            if seen.intersection(members):
                raise ValueError(f"block {members} overlaps another block")
            seen.update(members)
            normalized.append(members)
        if len(seen) != n:
            missing = sorted(set(range(1, n + 1)) - seen)
            raise ValueError(f"elements {missing} not covered")
        normalized.sort(key=lambda members: members[0])
        self.blocks = tuple(normalized)
        self.n = n

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        inner = ", ".join("{%s}" % ",".join(map(str, b)) for b in self.blocks)
        return f"SetPartition[{inner}]"


def block_factorial_weight(partition: SetPartition) -> int:
    """Product over blocks of (block size - 1)!."""
    weight = 1
    for block in partition.blocks:
        weight *= factorial(len(block) - 1)
    return weight


def enumerate_partitions(n: int, num_blocks: int) -> Iterator[SetPartition]:
    """Stream every partition of {1, ..., n} into exactly ``num_blocks`` blocks.

    Each partition is yielded exactly once, in lexicographic RGS order.
    The stream is empty when ``num_blocks`` lies outside 1..n (there
    are no such partitions).
    """
    if n < 1:
        raise ValueError(f"ground set size must be >= 1, got {n}")
    if num_blocks < 1 or num_blocks > n:
        return
    top = num_blocks - 1  # required maximum of the growth string
    code = [0] * n
    prefix_max = [0] * n
    _fill_smallest(code, prefix_max, 1, top)
    while True:
        yield _partition_from_code(code, n, num_blocks)
        # Successor: bump the rightmost position that stays a valid RGS
        # and still lets the suffix reach the required maximum.
        for i in range(n - 1, 0, -1):
            value = code[i] + 1
            if value > top or value > prefix_max[i - 1] + 1:
                continue
            if top - max(prefix_max[i - 1], value) > n - 1 - i:
                continue
            code[i] = value
            prefix_max[i] = max(prefix_max[i - 1], value)
            _fill_smallest(code, prefix_max, i + 1, top)
            break
        else:
            return


def _fill_smallest(code, prefix_max, start: int, top: int) -> None:
    # Smallest completion from `start` on: stay at 0 until every
    # remaining slot is needed to climb to `top`, then climb by 1.
    n = len(code)
    for j in range(start, n):
        if top - prefix_max[j - 1] == n - j:
            code[j] = prefix_max[j - 1] + 1
        else:
            code[j] = 0
        prefix_max[j] = max(prefix_max[j - 1], code[j])


def _partition_from_code(code, n: int, num_blocks: int) -> SetPartition:
    blocks = [[] for _ in range(num_blocks)]
    for index, block_id in enumerate(code):
        blocks[block_id].append(index + 1)
    return SetPartition(blocks, n)
