"""Dynamic program over a nice tree decomposition.

A table entry at node t describes a C-partition of the graph induced by the
vertices seen below t: `col` colours the bag vertices by the coalition they sit
in, `sizes[i]` is the size of the coalition with colour i (0 when the colour is
free), `value` is the weight captured so far. Only the best entry per
(col, sizes) key is kept unless `keep_all` is set.

Entries are plain tuples ``(col, sizes, value, link)`` where `col` is aligned
with the node's sorted bag and `link` indexes the child entries used to build it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .core import CPartition, Instance, SolveResult, WeightedGraph
from .treedec import FORGET, INTRODUCE, JOIN, LEAF, NiceTreeDecomposition, decompose, make_nice


@dataclass(frozen=True)
class DpEntry:
    col: tuple[tuple[int, int], ...]  # sorted (vertex, colour) pairs
    sizes: tuple[int, ...]
    value: int
    link: object = None

    @property
    def coloring(self) -> dict[int, int]:
        return dict(self.col)


# -- transition rules shared by the table solver and the DpEntry API

def _introduce_options(sizes, gain_by_color, cap, canonical):
    """Yield (colour, new sizes, gain) for putting a new vertex into each open colour."""
    fresh_taken = False
    for i, s in enumerate(sizes):
        if s >= cap:
            continue  # coalition already full
        if s == 0:
            if canonical and fresh_taken:
                continue
            fresh_taken = True
        yield i, sizes[:i] + (s + 1,) + sizes[i + 1:], gain_by_color[i]


def _canonical(col, sizes):
    """Rename colours in order of first appearance along the bag; free colours trail."""
    rename = {}
    for c in col:
        if c not in rename:
            rename[c] = len(rename)
    if all(k == v for k, v in rename.items()):
        return col, sizes
    new_sizes = [0] * len(sizes)
    for c, r in rename.items():
        new_sizes[r] = sizes[c]
    return tuple(rename[c] for c in col), tuple(new_sizes)


def _forget_sizes(col_after, sizes, color):
    if color in col_after:
        return sizes
    return sizes[:color] + (0,) + sizes[color + 1:]


def _join_sizes(col, s1, s2, cap):
    counts = [0] * len(s1)
    for c in col:
        counts[c] += 1
    out = []
    for a, b, k in zip(s1, s2, counts):
        s = a + b - k
        if s > cap:
            return None
        out.append(s)
    return tuple(out)


def _same_color_weight(bag, col, g: WeightedGraph):
    adj = g.adj
    total = 0
    for i, u in enumerate(bag):
        au = adj[u]
        for j in range(i + 1, len(bag)):
            if col[i] == col[j]:
                total += au.get(bag[j], 0)
    return total


# -- DpEntry-level steps

def leaf_entry(num_colors: int = 1) -> DpEntry:
    return DpEntry((), (0,) * num_colors, 0, None)


def introduce_step(entry: DpEntry, v: int, bag, g: WeightedGraph, cap: int,
                   canonical: bool = False) -> list[DpEntry]:
    """Candidates for the introduce node whose bag is `bag` (which contains v)."""
    col = entry.coloring
    if v in col:
        raise ValueError(f"vertex {v} already coloured")
    gain = [0] * len(entry.sizes)
    for u, c in col.items():
        gain[c] += g.weight(u, v)
    out = []
    for i, sizes, w in _introduce_options(entry.sizes, gain, cap, canonical):
        new_col = tuple(sorted({**col, v: i}.items()))
        out.append(DpEntry(new_col, sizes, entry.value + w, ("introduce", entry, i)))
    return out


def forget_step(entry: DpEntry, v: int, bag_after) -> DpEntry:
    """Drop v from the bag. If v was the last member of its colour the coalition is
    closed: its size is archived in the link and the colour becomes free."""
    col = entry.coloring
    color = col.pop(v)
    closed = color not in col.values()
    sizes = _forget_sizes(tuple(col.values()), entry.sizes, color)
    link = ("forget", entry, ("closed", color, entry.sizes[color]) if closed else None)
    return DpEntry(tuple(sorted(col.items())), sizes, entry.value, link)


def join_step(e1: DpEntry, e2: DpEntry, bag, g: WeightedGraph, cap: int) -> Optional[DpEntry]:
    if e1.col != e2.col:
        return None
    b = tuple(sorted(bag))
    col = tuple(e1.coloring[u] for u in b)
    sizes = _join_sizes(col, e1.sizes, e2.sizes, cap)
    if sizes is None:
        return None
    w = e1.value + e2.value - _same_color_weight(b, col, g)
    return DpEntry(e1.col, sizes, w, ("join", e1, e2))


# -- table solver

class _Table:
    __slots__ = ("entries", "index", "keep_all")

    def __init__(self, keep_all: bool):
        self.entries: list[tuple] = []
        self.index: dict = {}
        self.keep_all = keep_all

    def offer(self, col, sizes, val, link):
        if self.keep_all:
            self.entries.append((col, sizes, val, link))
            return
        key = (col, sizes)
        at = self.index.get(key)
        if at is None:
            self.index[key] = len(self.entries)
            self.entries.append((col, sizes, val, link))
        elif val > self.entries[at][2]:  # ties keep the first computed
            self.entries[at] = (col, sizes, val, link)


def run_tables(inst: Instance, ntd: NiceTreeDecomposition, *, canonical: bool = False,
               keep_all: bool = False) -> list[_Table]:
    g, cap = inst.graph, inst.capacity
    k = max(ntd.width + 1, 1)
    adj = g.adj
    bags = [tuple(sorted(t.bag)) for t in ntd.nodes]
    tables: list[Optional[_Table]] = [None] * len(ntd.nodes)
    # nodes are in post-order
    for ti, t in enumerate(ntd.nodes):
        tab = _Table(keep_all)
        bag = bags[ti]
        if t.kind == LEAF:
            tab.offer((), (0,) * k, 0, None)
        elif t.kind == INTRODUCE:
            (ci,) = t.children
            child_bag = bags[ci]
            v = t.vertex
            pos = bag.index(v)
            wv = [adj[v].get(u, 0) for u in child_bag]
            for ei, (col, sizes, val, _) in enumerate(tables[ci].entries):
                gain = [0] * k
                for c, w in zip(col, wv):
                    gain[c] += w
                for i, new_sizes, w in _introduce_options(sizes, gain, cap, canonical):
                    new_col = col[:pos] + (i,) + col[pos:]
                    if canonical:
                        new_col, new_sizes = _canonical(new_col, new_sizes)
                    tab.offer(new_col, new_sizes, val + w, (ei,))
        elif t.kind == FORGET:
            (ci,) = t.children
            pos = bags[ci].index(t.vertex)
            for ei, (col, sizes, val, _) in enumerate(tables[ci].entries):
                new_col = col[:pos] + col[pos + 1:]
                new_sizes = _forget_sizes(new_col, sizes, col[pos])
                if canonical:
                    new_col, new_sizes = _canonical(new_col, new_sizes)
                tab.offer(new_col, new_sizes, val, (ei,))
        elif t.kind == JOIN:
            c1, c2 = t.children
            by_col: dict = {}
            for ej, e in enumerate(tables[c2].entries):
                by_col.setdefault(e[0], []).append(ej)
            inner: dict = {}
            right = tables[c2].entries
            for ei, (col, s1, v1, _) in enumerate(tables[c1].entries):
                partners = by_col.get(col)
                if not partners:
                    continue
                if col not in inner:
                    inner[col] = _same_color_weight(bag, col, g)
                dup = inner[col]
                for ej in partners:
                    _, s2, v2, _ = right[ej]
                    sizes = _join_sizes(col, s1, s2, cap)
                    if sizes is not None:
                        tab.offer(col, sizes, v1 + v2 - dup, (ei, ej))
        else:
            raise ValueError(f"unknown node kind {t.kind}")
        tables[ti] = tab
    return tables


def _reconstruct(ntd: NiceTreeDecomposition, tables, root_entry: int, n: int) -> CPartition:
    # walks top-down carrying bag vertex -> coalition id, so colour renaming between
    # a node and its child does not matter
    bags = [tuple(sorted(t.bag)) for t in ntd.nodes]
    coalitions: list[list[int]] = []
    stack = [(ntd.root, root_entry, {})]
    while stack:
        ti, ei, owner = stack.pop()
        t = ntd.nodes[ti]
        link = tables[ti].entries[ei][3]
        if t.kind == LEAF:
            continue
        if t.kind == FORGET:
            (ci,) = t.children
            child_bag = bags[ci]
            child_col = tables[ci].entries[link[0]][0]
            color = child_col[child_bag.index(t.vertex)]
            mate = next((u for u, c in zip(child_bag, child_col) if c == color and u != t.vertex), None)
            owner = dict(owner)
            if mate is None:
                owner[t.vertex] = len(coalitions)
                coalitions.append([])
            else:
                owner[t.vertex] = owner[mate]
            coalitions[owner[t.vertex]].append(t.vertex)
            stack.append((ci, link[0], owner))
        elif t.kind == INTRODUCE:
            stack.append((t.children[0], link[0], owner))
        else:
            stack.append((t.children[0], link[0], owner))
            stack.append((t.children[1], link[1], owner))
    placed = {v for c in coalitions for v in c}
    coalitions.extend([v] for v in range(n) if v not in placed)
    return CPartition.of(coalitions)


def solve_tw(inst: Instance, ntd: Optional[NiceTreeDecomposition] = None, *,
             canonical: bool = False, keep_all: bool = False) -> SolveResult:
    start = time.perf_counter()
    if ntd is None:
        ntd = make_nice(decompose(inst.graph))
    tables = run_tables(inst, ntd, canonical=canonical, keep_all=keep_all)
    root = tables[ntd.root].entries
    best = max(range(len(root)), key=lambda i: (root[i][2], -i))
    part = _reconstruct(ntd, tables, best, inst.n)
    return SolveResult(root[best][2], part, "tw", time.perf_counter() - start)


def table_sizes(inst: Instance, ntd: NiceTreeDecomposition, **kw) -> list[int]:
    return [len(t.entries) for t in run_tables(inst, ntd, **kw)]
