"""Instance generators: seeded random graphs and the bin-packing construction."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .core import Instance, WeightedGraph
from .oracle import ORACLE_LIMIT, solve_exact


@dataclass(frozen=True)
class BinPackingInstance:
    items: tuple[int, ...]
    bin_size: int
    bins: int

    def __post_init__(self):
        if any(s < 1 for s in self.items):
            raise ValueError("item sizes must be positive")
        if self.bin_size < 0 or self.bins < 0:
            raise ValueError("bin size and bin count must be nonnegative")

    @property
    def balanced(self) -> bool:
        """Total size equals bins * bin size, necessary for a yes-instance."""
        return sum(self.items) == self.bins * self.bin_size


def gen_random(n: int, p: float, wmax: int = 1, capacity: int = 2, seed: int = 0) -> Instance:
    """G(n, p) with weights uniform in 1..wmax; pairs are visited in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.randint(1, wmax)))
    return Instance(WeightedGraph(n, tuple(edges)), capacity)


def from_bin_packing(bp: BinPackingInstance) -> tuple[Instance, int]:
    """One clique per item (order = item size) plus `bins` apex vertices joined to
    every clique vertex, with capacity B + 1.

    Clique vertices come first, item by item, then the apexes. The certificate is
    the sum of the clique edge counts plus bins * B; the optimum reaches it exactly
    when the items pack perfectly.
    """
    edges = []
    clique_vertices = []
    nxt = 0
    for s in bp.items:
        members = list(range(nxt, nxt + s))
        nxt += s
        edges.extend((a, b, 1) for i, a in enumerate(members) for b in members[i + 1:])
        clique_vertices.extend(members)
    apexes = list(range(nxt, nxt + bp.bins))
    edges.extend((v, b, 1) for b in apexes for v in clique_vertices)
    g = WeightedGraph(nxt + bp.bins, tuple(edges))
    cert = sum(s * (s - 1) // 2 for s in bp.items) + bp.bins * bp.bin_size
    return Instance(g, bp.bin_size + 1), cert


def apex_vertices(bp: BinPackingInstance) -> list[int]:
    start = sum(bp.items)
    return list(range(start, start + bp.bins))


def bin_packing_feasible(bp: BinPackingInstance) -> bool:
    """Direct decision by DP over item subsets: fill bins one at a time, each to exactly B."""
    items, B, k = bp.items, bp.bin_size, bp.bins
    if sum(items) != k * B:
        return False
    if not items:
        return True
    if B == 0:
        return False
    full = (1 << len(items)) - 1

    @lru_cache(maxsize=None)
    def ok(mask: int) -> bool:
        # mask = items already placed; the open bin holds load % B
        if mask == full:
            return True
        load = sum(items[i] for i in range(len(items)) if mask >> i & 1) % B
        return any(not mask >> i & 1 and load + items[i] <= B and ok(mask | 1 << i)
                   for i in range(len(items)))

    return ok(0)


def check_reduction_equivalence(bp: BinPackingInstance) -> bool:
    """True when 'packable' agrees with 'graph optimum equals the certificate'."""
    inst, cert = from_bin_packing(bp)
    if inst.n > ORACLE_LIMIT:
        raise ValueError(f"construction has {inst.n} vertices, above the oracle limit")
    return bin_packing_feasible(bp) == (solve_exact(inst).value == cert)


def random_bin_packing(rng: random.Random, max_total: int = 8, max_vertices: int = ORACLE_LIMIT) -> BinPackingInstance:
    """Random balanced instance: total item size equals bins * B.

    Sizes are drawn by cutting `bins * B` into random positive parts, so both
    packable and unpackable instances occur.
    """
    while True:
        bins = rng.randint(1, 4)
        bin_size = rng.randint(1, max_total // bins)
        total = bins * bin_size
        if total + bins > max_vertices:
            continue
        cuts = sorted(rng.sample(range(1, total), rng.randint(0, total - 1))) if total > 1 else []
        bounds = [0] + cuts + [total]
        items = tuple(b - a for a, b in zip(bounds, bounds[1:]))
        return BinPackingInstance(items, bin_size, bins)
