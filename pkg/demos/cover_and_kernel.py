"""
Small vertex covers: matching-based solver and kernel
=====================================================

A graph whose edges all touch six hub vertices. Guessing how the hubs group
up and filling the groups by weighted matching solves it quickly; on the
unweighted version, the kernel throws away leaves that can never matter.
"""

import random
import time

from ccf import Instance, WeightedGraph, kernelize, min_vertex_cover, solve_exact, solve_vc
from ccf.kernel import kernel_size_certificate

rng = random.Random(3)
hubs = range(6)
edges = [(u, v, 1) for u in hubs for v in hubs if u < v and rng.random() < 0.4]
for x in range(6, 150):
    edges.extend((u, x, 1) for u in rng.sample(hubs, rng.randint(1, 2)))
g = WeightedGraph(150, tuple(edges))
print("minimum vertex cover:", min_vertex_cover(g))

for cap in (2, 3, 4):
    t0 = time.perf_counter()
    res = solve_vc(Instance(g, cap))
    print(f"C={cap}: value {res.value} in {time.perf_counter() - t0:.2f}s")

# the kernel keeps at most vc + vc(vc+1)C vertices
inst = Instance(g, 2)
reduced, removed = kernelize(inst)
report = kernel_size_certificate(inst, reduced)
print(f"kernel: {inst.n} -> {reduced.n} vertices (bound {report.bound}), {len(removed)} removed")
print("optimum on kernel:", solve_vc(reduced).value)

# a star is the simplest case: the centre can only use C - 1 leaves
star = Instance(WeightedGraph(9, tuple((0, i, 1) for i in range(1, 9))), 2)
small, _ = kernelize(star)
print(f"star: {star.n} -> {small.n} vertices, optimum {solve_exact(star).value} == {solve_exact(small).value}")
