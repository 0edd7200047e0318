"""Bipartite matching: maximum weight (assignment) and maximum cardinality (Hopcroft-Karp)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment


@dataclass(frozen=True)
class BipartiteGraph:
    left: int
    right: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        seen = set()
        for a, b, w in self.edges:
            if not (0 <= a < self.left and 0 <= b < self.right):
                raise ValueError(f"edge ({a}, {b}) out of range")
            if (a, b) in seen:
                raise ValueError(f"duplicate edge ({a}, {b})")
            if w < 0:
                raise ValueError("negative weight")
            seen.add((a, b))


def max_weight_matching(b: BipartiteGraph) -> tuple[int, list[tuple[int, int]]]:
    """Maximum total weight matching (not necessarily of maximum cardinality).

    Solved as an assignment problem on a square matrix; missing edges and the
    padding rows/columns have weight 0, which is lossless for nonnegative weights.
    """
    if not b.edges:
        return 0, []
    size = max(b.left, b.right)
    profit = np.zeros((size, size), dtype=np.int64)
    present = np.zeros((size, size), dtype=bool)
    for x, y, w in b.edges:
        profit[x, y] = w
        present[x, y] = True
    rows, cols = linear_sum_assignment(profit, maximize=True)
    pairs = [(int(r), int(c)) for r, c in zip(rows, cols) if present[r, c] and profit[r, c] > 0]
    return int(sum(profit[r, c] for r, c in pairs)), pairs


def max_cardinality_matching(b: BipartiteGraph) -> tuple[int, list[tuple[int, int]], list[int]]:
    """Hopcroft-Karp. Returns (size, matched pairs, unmatched right vertices)."""
    adj: list[list[int]] = [[] for _ in range(b.left)]
    for x, y, _ in b.edges:
        adj[x].append(y)
    for a in adj:
        a.sort()
    match_l = [-1] * b.left
    match_r = [-1] * b.right
    inf = b.left + b.right + 1
    dist = [inf] * b.left

    def bfs() -> bool:
        q = deque()
        for x in range(b.left):
            if match_l[x] == -1:
                dist[x] = 0
                q.append(x)
            else:
                dist[x] = inf
        found = False
        while q:
            x = q.popleft()
            for y in adj[x]:
                z = match_r[y]
                if z == -1:
                    found = True
                elif dist[z] == inf:
                    dist[z] = dist[x] + 1
                    q.append(z)
        return found

    def dfs(root: int) -> bool:
        # iterative augmenting-path search along the BFS layering
        it = {root: 0}
        path = [root]
        while path:
            x = path[-1]
            advanced = False
            while it[x] < len(adj[x]):
                y = adj[x][it[x]]
                it[x] += 1
                z = match_r[y]
                if z == -1:
                    # augment along the stack
                    for xx in reversed(path):
                        prev = match_l[xx]
                        match_l[xx] = y
                        match_r[y] = xx
                        y = prev
                    return True
                if dist[z] == dist[x] + 1 and z not in it:
                    it[z] = 0
                    path.append(z)
                    advanced = True
                    break
            if not advanced:
                dist[x] = inf
                path.pop()
        return False

    size = 0
    while bfs():
        for x in range(b.left):
            if match_l[x] == -1 and dfs(x):
                size += 1
    pairs = [(x, y) for x, y in enumerate(match_l) if y != -1]
    unmatched = [y for y in range(b.right) if match_r[y] == -1]
    return size, pairs, unmatched
