"""
Dynamic programming over a tree decomposition
=============================================

Random trees have width 1, so the table at each node stays tiny even with a
few hundred vertices.
"""

import random
import time

from ccf import Instance, WeightedGraph, decompose, make_nice, solve_tw, validate
from ccf.dp_tw import table_sizes

rng = random.Random(1)
n = 300
tree = WeightedGraph(n, tuple((v, rng.randrange(v), rng.randint(1, 5)) for v in range(1, n)))
inst = Instance(tree, capacity=5)

ntd = make_nice(decompose(tree))
print(f"nice decomposition: {len(ntd.nodes)} nodes, width {ntd.width}")

for canonical in (False, True):
    sizes = table_sizes(inst, ntd, canonical=canonical)
    t0 = time.perf_counter()
    res = solve_tw(inst, ntd, canonical=canonical)
    print(f"canonical={canonical}: value {res.value}, largest table {max(sizes)}, "
          f"{time.perf_counter() - t0:.3f}s, valid={validate(inst, res.partition) is None}")

# a denser graph shows why colour renaming matters
g = WeightedGraph(9, tuple((u, v, 1) for u in range(9) for v in range(u + 1, 9) if rng.random() < 0.5))
ntd = make_nice(decompose(g))
for canonical in (False, True):
    print(f"dense n=9 width {ntd.width}, canonical={canonical}: "
          f"largest table {max(table_sizes(Instance(g, 3), ntd, canonical=canonical))}")
