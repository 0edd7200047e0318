"""Exhaustive C-partition search, used as ground truth by the test-suite."""

from __future__ import annotations

import time
from typing import Iterator, Sequence

from .core import CPartition, Instance, PreconditionError, SolveResult

ORACLE_LIMIT = 12


def restricted_growth(items: Sequence[int], cap: int) -> Iterator[list[list[int]]]:
    """Yield every partition of `items` whose blocks have at most `cap` elements.

    Item i goes into one of the blocks opened so far or opens a new one, which is
    the restricted-growth-string order; each partition appears exactly once.
    """
    blocks: list[list[int]] = []
    k = len(items)

    def rec(i):
        if i == k:
            yield [list(b) for b in blocks]
            return
        x = items[i]
        for b in blocks:
            if len(b) < cap:
                b.append(x)
                yield from rec(i + 1)
                b.pop()
        blocks.append([x])
        yield from rec(i + 1)
        blocks.pop()

    if cap < 1 and k:
        return
    yield from rec(0)


def enumerate_c_partitions(n: int, cap: int) -> Iterator[list[list[int]]]:
    if n > ORACLE_LIMIT:
        raise PreconditionError(f"n={n} exceeds enumeration limit {ORACLE_LIMIT}")
    return restricted_growth(range(n), cap)


def solve_exact(inst: Instance, limit: int = ORACLE_LIMIT) -> SolveResult:
    n, cap = inst.n, inst.capacity
    if n > limit:
        raise PreconditionError(f"oracle refuses n={n} > limit {limit}")
    start = time.perf_counter()
    adj = inst.graph.adj
    # weight of edges whose larger endpoint is >= i, i.e. not yet settled before vertex i
    remaining = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        remaining[i] = remaining[i + 1] + sum(w for v, w in adj[i].items() if v < i)

    blocks: list[list[int]] = []
    best_value = -1
    best: list[list[int]] = []

    def rec(i, cur):
        nonlocal best_value, best
        if i == n:
            if cur > best_value:
                best_value = cur
                best = [list(b) for b in blocks]
            return
        if cur + remaining[i] <= best_value:
            return
        nbrs = adj[i]
        for b in blocks:
            if len(b) < cap:
                gain = sum(nbrs.get(u, 0) for u in b)
                b.append(i)
                rec(i + 1, cur + gain)
                b.pop()
        blocks.append([i])
        rec(i + 1, cur)
        blocks.pop()

    rec(0, 0)
    return SolveResult(max(best_value, 0), CPartition.of(best), "oracle", time.perf_counter() - start)
