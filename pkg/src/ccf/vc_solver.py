"""Solver parameterized by vertex cover: guess the cover's coalitions, fill them by matching."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .core import CPartition, Instance, SolveResult, WeightedGraph
from .matching import BipartiteGraph, max_weight_matching
from .oracle import restricted_growth


@dataclass(frozen=True)
class CoverPartitionState:
    cover: tuple[int, ...]
    independent: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    base_value: int


def min_vertex_cover(g: WeightedGraph, budget: Optional[int] = None) -> list[int]:
    """Exact minimum vertex cover by branching.

    Degree-0 vertices are dropped and a degree-1 vertex forces its neighbour into
    the cover; otherwise branch on a maximum-degree vertex v (take v, or take all of
    N(v)). With `budget`, gives up (returns None) after that many branch nodes.
    """
    best: list[Optional[list[int]]] = [None]
    nodes = [0]

    def rec(nbrs: dict[int, set[int]], chosen: list[int]):
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise _Budget
        nbrs = {v: set(s) for v, s in nbrs.items()}
        chosen = list(chosen)
        changed = True
        while changed:
            changed = False
            for v in sorted(nbrs):
                if v not in nbrs:
                    continue
                if not nbrs[v]:
                    del nbrs[v]
                    changed = True
                elif len(nbrs[v]) == 1:
                    (u,) = nbrs[v]
                    _take(nbrs, u)
                    chosen.append(u)
                    changed = True
        if best[0] is not None and len(chosen) >= len(best[0]):
            return
        if not nbrs:
            best[0] = sorted(chosen)
            return
        edges = sum(len(s) for s in nbrs.values()) // 2
        dmax = max(len(s) for s in nbrs.values())
        # each further cover vertex covers at most dmax edges
        if best[0] is not None and len(chosen) + -(-edges // dmax) >= len(best[0]):
            return
        v = max(sorted(nbrs), key=lambda x: len(nbrs[x]))
        with_v = {x: set(s) for x, s in nbrs.items()}
        _take(with_v, v)
        rec(with_v, chosen + [v])
        without_v = {x: set(s) for x, s in nbrs.items()}
        nv = sorted(without_v[v])
        for u in nv:
            _take(without_v, u)
        rec(without_v, chosen + nv)

    adj = {v: set(a) for v, a in enumerate(g.adj)}
    try:
        rec(adj, [])
    except _Budget:
        return None
    return best[0] or []


class _Budget(Exception):
    pass


def _take(nbrs: dict[int, set[int]], v: int) -> None:
    for u in nbrs.pop(v, ()):
        nbrs[u].discard(v)


def enumerate_cover_partitions(cover: Iterable[int], cap: int) -> Iterator[list[list[int]]]:
    return restricted_growth(list(cover), cap)


def complete_via_matching(inst: Instance, state: CoverPartitionState,
                          literal_slots: bool = False) -> SolveResult:
    """Best extension of the guessed cover blocks: each independent vertex joins at
    most one block, filling that block's free slots.

    Block i offers C - |C_i| interchangeable slots. By default a block only gets
    as many slot columns as it has independent neighbours, since extra slots can
    never be matched; `literal_slots` builds all C - |C_i| of them.
    """
    g, cap = inst.graph, inst.capacity
    adj = g.adj
    indep = state.independent
    ipos = {x: j for j, x in enumerate(indep)}
    slot_block: list[int] = []
    edges = []
    for bi, block in enumerate(state.blocks):
        gain: dict[int, int] = {}
        for u in block:
            for x, w in adj[u].items():
                if x in ipos:
                    gain[x] = gain.get(x, 0) + w
        free = cap - len(block)
        slots = free if literal_slots else min(free, len(gain))
        for _ in range(slots):
            row = len(slot_block)
            slot_block.append(bi)
            edges.extend((row, ipos[x], w) for x, w in sorted(gain.items()))
    total, pairs = max_weight_matching(BipartiteGraph(len(slot_block), len(indep), tuple(edges)))
    coalitions = [list(b) for b in state.blocks]
    taken = set()
    for row, col in pairs:
        coalitions[slot_block[row]].append(indep[col])
        taken.add(indep[col])
    coalitions.extend([x] for x in indep if x not in taken)
    return SolveResult(state.base_value + total, CPartition.of(coalitions), "vc")


def _block_value(g: WeightedGraph, block) -> int:
    adj = g.adj
    return sum(adj[u].get(v, 0) for i, u in enumerate(block) for v in block[i + 1:])


def solve_vc(inst: Instance, cover: Optional[Iterable[int]] = None,
             literal_slots: bool = False) -> SolveResult:
    start = time.perf_counter()
    g = inst.graph
    if cover is None:
        cover = min_vertex_cover(g)
    cover = tuple(sorted(set(cover)))
    for u, v, _ in g.edges:
        if u not in cover and v not in cover:
            raise ValueError(f"supplied set is not a vertex cover: edge ({u}, {v}) uncovered")
    cset = set(cover)
    indep = tuple(v for v in range(g.n) if v not in cset)
    best: Optional[SolveResult] = None
    for blocks in enumerate_cover_partitions(cover, inst.capacity):
        base = sum(_block_value(g, b) for b in blocks)
        state = CoverPartitionState(cover, indep, tuple(tuple(b) for b in blocks), base)
        cand = complete_via_matching(inst, state, literal_slots)
        if best is None or cand.value > best.value:
            best = cand
    return SolveResult(best.value, best.partition, "vc", time.perf_counter() - start)
