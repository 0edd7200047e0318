"""Solver parameterized by vertex integrity.

For a separator U whose removal leaves small components, guess how the optimum
splits U into coalitions, group the components of G - U into types, and pick for
every component a way to split it between the guessed coalitions and fresh ones
through a small integer program solved by branch and bound.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import CPartition, Instance, PreconditionError, SolveResult, WeightedGraph
from .oracle import restricted_growth


@dataclass(frozen=True)
class ViSet:
    separator: tuple[int, ...]
    k: int


@dataclass(frozen=True)
class Vector:
    assign: tuple[int, ...]  # per position of the representative ordering; < p joins a cover block
    counts: tuple[int, ...]  # vertices sent to each cover block
    gain: int


@dataclass
class ComponentType:
    key: tuple
    members: list[tuple[int, ...]] = field(default_factory=list)  # components in canonical order

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def representative(self) -> tuple[int, ...]:
        return self.members[0]


def components(g: WeightedGraph, removed: Sequence[int]) -> list[list[int]]:
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            for v in g.adj[stack.pop()]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def find_vi_set(g: WeightedGraph, kmax: Optional[int] = None) -> ViSet:
    """Smallest k with a set U, |U| = k' <= k, leaving components of order <= k - k'.

    Exhaustive over k ascending, then k' ascending, then U in lexicographic order.
    """
    if kmax is None:
        kmax = g.n
    for k in range(0, kmax + 1):
        for kp in range(0, min(k, g.n) + 1):
            for sep in itertools.combinations(range(g.n), kp):
                comps = components(g, sep)
                if all(len(c) <= k - kp for c in comps):
                    return ViSet(sep, k)
    raise PreconditionError(f"vertex integrity exceeds {kmax}")


def canonical_key(g: WeightedGraph, comp: Sequence[int], separator: Sequence[int]) -> tuple[tuple, tuple[int, ...]]:
    """Lexicographically least encoding of a component relative to the separator.

    The encoding of an ordering (s_1..s_m) is the list of weighted separator
    neighbourhoods of each s_i followed by the weights w(s_i, s_j), i < j. Two
    components get the same key exactly when a bijection fixing the separator maps
    one onto the other. Returns the key and the ordering that attains it.
    """
    spos = {u: i for i, u in enumerate(separator)}
    adj = g.adj
    sig = {v: tuple(sorted((spos[u], w) for u, w in adj[v].items() if u in spos)) for v in comp}
    # the least key lists signatures in sorted order, so only orderings inside
    # groups of equal signature need to be tried
    groups: dict[tuple, list[int]] = {}
    for v in comp:
        groups.setdefault(sig[v], []).append(v)
    head = tuple(s for s in sorted(groups) for _ in groups[s])
    best_tail, best_order = None, None
    for choice in itertools.product(*(itertools.permutations(groups[s]) for s in sorted(groups))):
        order = tuple(v for part in choice for v in part)
        tail = tuple(adj[order[i]].get(order[j], 0)
                     for i in range(len(order)) for j in range(i + 1, len(order)))
        if best_tail is None or tail < best_tail:
            best_tail, best_order = tail, order
    return (head, best_tail), best_order


def classify_components(g: WeightedGraph, separator: Sequence[int]) -> list[ComponentType]:
    types: dict[tuple, ComponentType] = {}
    for comp in components(g, separator):
        key, order = canonical_key(g, comp, separator)
        types.setdefault(key, ComponentType(key)).members.append(order)
    return list(types.values())


def enumerate_vectors(g: WeightedGraph, rep: Sequence[int], blocks: Sequence[Sequence[int]], k: int,
                      cap: int, canonical: bool = False) -> list[Vector]:
    """Every split of the component `rep` between the p cover blocks and k fresh groups.

    Label l < p sends a vertex to cover block l; labels p..p+k-1 are fresh
    coalitions local to this component. Splits that overfill a fresh group or a
    cover block (counting the block's own vertices) are dropped. With `canonical`,
    fresh labels are only used in order of first appearance, which removes
    relabellings of the same split.
    """
    p = len(blocks)
    m = len(rep)
    adj = g.adj
    to_block = [[sum(adj[v].get(u, 0) for u in b) for b in blocks] for v in rep]
    inner = [[adj[rep[i]].get(rep[j], 0) for j in range(m)] for i in range(m)]
    room = [cap - len(b) for b in blocks]
    out = []
    assign = [0] * m
    sizes = [0] * (p + k)

    def rec(i, fresh_used, gain):
        if i == m:
            out.append(Vector(tuple(assign), tuple(sizes[:p]), gain))
            return
        if canonical:
            labels = itertools.chain(range(p), range(p, p + min(fresh_used + 1, k)))
        else:
            labels = range(p + k)
        for lab in labels:
            limit = room[lab] if lab < p else cap
            if sizes[lab] >= limit:
                continue
            add = sum(inner[i][j] for j in range(i) if assign[j] == lab)
            if lab < p:
                add += to_block[i][lab]
            assign[i] = lab
            sizes[lab] += 1
            rec(i + 1, max(fresh_used, lab - p + 1), gain + add)
            sizes[lab] -= 1

    rec(0, 0, 0)
    return out


def _best_extension(types, options, zero_gain, room):
    """Branch and bound over how many components of each type take each vector."""
    ntypes = len(types)
    best = [-1, None]
    # optimistic bound: every remaining component gets its best vector
    tail = [0] * (ntypes + 1)
    for ti in range(ntypes - 1, -1, -1):
        top = max([zero_gain[ti]] + [o[1] for o in options[ti]])
        tail[ti] = tail[ti + 1] + top * types[ti].count
    top_gain = [max([zero_gain[ti]] + [o[1] for o in options[ti]]) for ti in range(ntypes)]
    chosen: list[tuple[int, int, int]] = []

    def rec(ti, oi, left, caps, cur):
        if ti == ntypes:
            if cur > best[0]:
                best[0] = cur
                best[1] = list(chosen)
            return
        if cur + left * top_gain[ti] + tail[ti + 1] <= best[0]:
            return
        opts = options[ti]
        if oi == len(opts):
            # the rest stay out of the cover blocks
            chosen.append((ti, -1, left))
            nxt = types[ti + 1].count if ti + 1 < ntypes else 0
            rec(ti + 1, 0, nxt, caps, cur + left * zero_gain[ti])
            chosen.pop()
            return
        counts, gain = opts[oi]
        most = left
        for l, c in enumerate(counts):
            if c:
                most = min(most, caps[l] // c)
        for times in range(most, -1, -1):
            if times:
                new_caps = tuple(r - times * c for r, c in zip(caps, counts))
                chosen.append((ti, oi, times))
            else:
                new_caps = caps
            rec(ti, oi + 1, left - times, new_caps, cur + times * gain)
            if times:
                chosen.pop()

    rec(0, 0, types[0].count if ntypes else 0, tuple(room), 0)
    return best[0], best[1]


def solve_vi(inst: Instance, vi_set: Optional[ViSet] = None, literal: bool = False) -> SolveResult:
    start = time.perf_counter()
    g, cap = inst.graph, inst.capacity
    if vi_set is None:
        vi_set = find_vi_set(g)
    sep = vi_set.separator
    types = classify_components(g, sep)
    adj = g.adj
    best_value, best_part = -1, None
    for blocks in restricted_growth(list(sep), cap):
        base = sum(adj[u].get(v, 0) for b in blocks for i, u in enumerate(b) for v in b[i + 1:])
        room = [cap - len(b) for b in blocks]
        options, zero_gain, witness = [], [], []
        for t in types:
            per_counts: dict[tuple, Vector] = {}
            for vec in enumerate_vectors(g, t.representative, blocks, vi_set.k, cap, canonical=not literal):
                cur = per_counts.get(vec.counts)
                if cur is None or vec.gain > cur.gain:
                    per_counts[vec.counts] = vec
            zero = per_counts.pop(tuple([0] * len(blocks)))
            opts = sorted((v for v in per_counts.values() if v.gain > zero.gain),
                          key=lambda v: (-v.gain, v.counts))
            options.append([(v.counts, v.gain) for v in opts])
            zero_gain.append(zero.gain)
            witness.append((opts, zero))
        obj, plan = _best_extension(types, options, zero_gain, room)
        if base + obj > best_value:
            best_value = base + obj
            best_part = _decode(blocks, types, witness, plan, len(blocks))
    return SolveResult(best_value, best_part, "vi", time.perf_counter() - start)


def _decode(blocks, types, witness, plan, p) -> CPartition:
    coalitions = [list(b) for b in blocks]
    used = [0] * len(types)
    for ti, oi, times in plan:
        opts, zero = witness[ti]
        vec = zero if oi == -1 else opts[oi]
        for comp in types[ti].members[used[ti]:used[ti] + times]:
            fresh: dict[int, list[int]] = {}
            for v, lab in zip(comp, vec.assign):
                if lab < p:
                    coalitions[lab].append(v)
                else:
                    fresh.setdefault(lab, []).append(v)
            coalitions.extend(fresh.values())
        used[ti] += times
    return CPartition.of(coalitions)
