"""Exhaustive enumerators used as independent oracles for the classical limits."""

from __future__ import annotations

import itertools
import math
from typing import Iterator


def set_partitions(n: int) -> Iterator[list[list[int]]]:
    """All partitions of {0, ..., n-1}, via restricted growth strings."""
    if n == 0:
        yield []
        return
    a = [0] * n

    def rec(i: int, top: int):
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for elem, b in enumerate(a):
                blocks[b].append(elem)
            yield blocks
            return
        for b in range(top + 2):
            a[i] = b
            yield from rec(i + 1, max(top, b))

    a[0] = 0
    yield from rec(1, 0)


def count_partitions(n: int, blocks: int | None = None) -> int:
    return sum(1 for p in set_partitions(n) if blocks is None or len(p) == blocks)


def count_ordered_partitions(n: int) -> int:
    """Ordered set partitions: every block ordering of every set partition, listed explicitly."""
    seen = set()
    for p in set_partitions(n):
        for perm in itertools.permutations(tuple(b) for b in p):
            seen.add(perm)
    return len(seen)


def bell_polynomial_by_enumeration(n: int, x) -> object:
    """sum over set partitions of x^(number of blocks)."""
    return sum((x ** len(p) for p in set_partitions(n)), 0 * x)


def stirling2_by_surjections(n: int) -> list[int]:
    """Row [{n,0}, ..., {n,n}] from counting surjections onto k labelled blocks."""
    out = []
    for k in range(n + 1):
        surj = sum(1 for f in itertools.product(range(k), repeat=n) if len(set(f)) == k) if k else int(n == 0)
        out.append(surj // math.factorial(k))
    return out
