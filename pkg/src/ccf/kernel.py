"""Polynomial kernel for the unweighted problem (vertex cover + capacity)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Instance, PreconditionError, WeightedGraph
from .matching import BipartiteGraph, max_cardinality_matching
from .vc_solver import min_vertex_cover


def build_aux_graph(g: WeightedGraph, cover: Iterable[int], cap: int) -> tuple[BipartiteGraph, list[int], list[int]]:
    """Bipartite graph with t = |U|*C + C copies of each cover vertex on the left
    and the independent vertices on the right.

    Returns the graph, the cover vertex owning each left copy, and the original
    label of each right vertex.
    """
    if not g.is_unweighted():
        raise PreconditionError("kernel is defined for unweighted instances only")
    cover = sorted(set(cover))
    cset = set(cover)
    indep = [v for v in range(g.n) if v not in cset]
    ipos = {v: j for j, v in enumerate(indep)}
    t = len(cover) * cap + cap
    owner = []
    edges = []
    for u in cover:
        targets = sorted(ipos[x] for x in g.adj[u] if x in ipos)
        for _ in range(t):
            row = len(owner)
            owner.append(u)
            edges.extend((row, y, 1) for y in targets)
    return BipartiteGraph(len(owner), len(indep), tuple(edges)), owner, indep


def reduce_once(inst: Instance, cover: Optional[Iterable[int]] = None) -> list[int]:
    """Independent vertices left unmatched by a maximum matching of the auxiliary graph.

    Every one of them can go: removing an unmatched vertex keeps the matching
    maximum, so the others stay unmatched and the rule applies to each in turn.
    """
    g = inst.graph
    if cover is None:
        cover = min_vertex_cover(g)
    aux, _, indep = build_aux_graph(g, cover, inst.capacity)
    _, _, unmatched = max_cardinality_matching(aux)
    return [indep[y] for y in unmatched]


def kernelize(inst: Instance, batch: bool = True) -> tuple[Instance, list[int]]:
    """Apply the deletion rule until it no longer fires.

    Returns the reduced instance (vertices relabelled in increasing order of their
    original labels) and the sorted list of removed original vertices. With
    ``batch=False`` one vertex is removed per matching computation.
    """
    if not inst.graph.is_unweighted():
        raise PreconditionError("kernel is defined for unweighted instances only")
    labels = list(range(inst.n))
    cur = inst
    removed: list[int] = []
    while True:
        doomed = reduce_once(cur)
        if not doomed:
            break
        if not batch:
            doomed = doomed[:1]
        gone = set(doomed)
        keep = [v for v in range(cur.n) if v not in gone]
        removed.extend(labels[v] for v in doomed)
        sub, _ = cur.graph.induced(keep)
        labels = [labels[v] for v in keep]
        cur = Instance(sub, inst.capacity)
    return cur, sorted(removed)


@dataclass(frozen=True)
class KernelReport:
    vc: int
    capacity: int
    kept: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.kept <= self.bound

    @property
    def ratio(self) -> float:
        return self.kept / self.bound if self.bound else 0.0


def kernel_size_certificate(inst: Instance, reduced: Instance) -> KernelReport:
    """Check |V(kernel)| <= vc + vc*(vc+1)*C, vc taken on the original graph."""
    vc = len(min_vertex_cover(inst.graph))
    bound = vc + vc * (vc + 1) * inst.capacity
    return KernelReport(vc, inst.capacity, reduced.n, bound)
