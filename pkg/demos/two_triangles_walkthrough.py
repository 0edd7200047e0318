"""
A six-vertex coalition problem solved four ways
===============================================

Two triangles joined by two edges, capacity 4. The best split keeps each
triangle together and is worth 6.
"""

from ccf import CPartition, Instance, WeightedGraph, is_nash_stable, value
from ccf import solve_exact, solve_tw, solve_vc, solve_vi

edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (1, 4), (2, 5)]
inst = Instance(WeightedGraph(6, tuple((u, v, 1) for u, v in edges)), capacity=4)

for solve in (solve_exact, solve_tw, solve_vc, solve_vi):
    res = solve(inst)
    print(f"{res.solver:>6}: value {res.value}  coalitions {res.partition.as_lists()}")

# some worse splits, for comparison
for blocks in ([[0, 2, 5], [1, 4, 3]], [[0, 1, 2, 4], [3, 5]], [[0], [1, 2, 4, 5], [3]]):
    p = CPartition.of(blocks)
    print(f"{blocks}: value {value(inst, p)}, Nash-stable {is_nash_stable(inst, p)}")
