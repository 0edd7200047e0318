"""
Vertex integrity and the bin-packing construction
=================================================

Removing a few vertices from a graph with small vertex integrity leaves many
small components, most of them alike. The solver groups identical components
and decides how many of each go where.
"""

from ccf import BinPackingInstance, Instance, WeightedGraph, from_bin_packing, solve_exact, solve_vi
from ccf.gen import bin_packing_feasible
from ccf.vi_solver import classify_components, find_vi_set

# a hub with ten pendant triangles
edges = []
for t in range(10):
    a, b, c = 1 + 3 * t, 2 + 3 * t, 3 + 3 * t
    edges += [(a, b, 1), (b, c, 1), (a, c, 1), (0, a, 1)]
g = WeightedGraph(31, tuple(edges))
vs = find_vi_set(g)
types = classify_components(g, vs.separator)
print(f"separator {vs.separator}, integrity {vs.k}, {len(types)} component type(s) "
      f"of counts {[t.count for t in types]}")
for cap in (3, 4, 5):
    print(f"C={cap}: value {solve_vi(Instance(g, cap), vs).value}")

# packing items into bins of size B, encoded as a coalition problem of capacity B + 1
for items, B, k in [((1, 1, 2), 2, 2), ((3, 1), 2, 2), ((2, 2), 4, 1)]:
    bp = BinPackingInstance(items, B, k)
    inst, cert = from_bin_packing(bp)
    opt = solve_exact(inst).value
    print(f"items {items} into {k} bins of {B}: packable={bin_packing_feasible(bp)}, "
          f"graph optimum {opt}, certificate {cert}")
