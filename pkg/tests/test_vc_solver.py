import itertools
import random

import pytest

from ccf.core import Instance, WeightedGraph, validate, value
from ccf.oracle import solve_exact
from ccf.vc_solver import (CoverPartitionState, complete_via_matching, enumerate_cover_partitions,
                           min_vertex_cover, solve_vc)

from conftest import two_triangles_graph, random_graph


def star(leaves):
    return WeightedGraph(leaves + 1, tuple((0, i, 1) for i in range(1, leaves + 1)))


def brute_cover_size(g):
    return next(k for k in range(g.n + 1) for s in itertools.combinations(range(g.n), k)
                if all(u in s or v in s for u, v, _ in g.edges))


def is_cover(g, cover):
    return all(u in cover or v in cover for u, v, _ in g.edges)


def test_min_vertex_cover_examples():
    c4 = WeightedGraph(4, ((0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)))
    assert len(min_vertex_cover(c4)) == 2
    assert min_vertex_cover(star(5)) == [0]
    vc = min_vertex_cover(two_triangles_graph())
    assert len(vc) == 4 == brute_cover_size(two_triangles_graph())
    assert is_cover(two_triangles_graph(), set(vc))
    assert min_vertex_cover(WeightedGraph(4)) == []


def test_min_vertex_cover_random():
    rng = random.Random(31)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.5, 0.8]), 1)
        vc = min_vertex_cover(g)
        assert is_cover(g, set(vc))
        assert len(vc) == brute_cover_size(g)


def test_min_vertex_cover_budget():
    g = random_graph(random.Random(2), 40, 0.5, 1)
    assert min_vertex_cover(g, budget=5) is None


@pytest.mark.parametrize("size, cap, expected", [(3, 3, 5), (3, 1, 1), (4, 2, 10)])
def test_cover_partition_counts(size, cap, expected):
    parts = list(enumerate_cover_partitions(range(size), cap))
    assert len(parts) == expected
    assert all(len(b) <= cap for p in parts for b in p)


def _state(inst, cover, blocks):
    g = inst.graph
    base = sum(g.weight(u, v) for b in blocks for u, v in itertools.combinations(b, 2) if v in g.adj[u])
    indep = tuple(v for v in range(g.n) if v not in cover)
    return CoverPartitionState(tuple(sorted(cover)), indep, tuple(tuple(b) for b in blocks), base)


def test_complete_star():
    inst = Instance(star(5), 3)
    res = complete_via_matching(inst, _state(inst, {0}, [[0]]))
    assert res.value == 2
    assert validate(inst, res.partition) is None


def test_complete_full_blocks_give_base_value():
    inst = Instance(two_triangles_graph(), 2)
    st = _state(inst, {0, 1, 3, 4}, [[0, 1], [3, 4]])
    assert complete_via_matching(inst, st).value == st.base_value == 2


def test_complete_two_triangles_example(two_triangles):
    # cover {v2, v3, v5, v6}, blocks {v2, v3} and {v5, v6}
    st = _state(two_triangles, {1, 2, 4, 5}, [[1, 2], [4, 5]])
    res = complete_via_matching(two_triangles, st)
    assert res.value == 6
    assert res.partition.as_lists() == [[0, 1, 2], [3, 4, 5]]


def test_literal_slots_agree():
    rng = random.Random(32)
    for _ in range(40):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, 0.5, 5)
        cap = rng.randint(1, n)
        inst = Instance(g, cap)
        assert solve_vc(inst, literal_slots=True).value == solve_vc(inst).value


def test_examples(two_triangles):
    assert solve_vc(two_triangles).value == 6
    res = solve_vc(Instance(WeightedGraph(5), 3))
    assert res.value == 0 and len(res.partition.coalitions) == 5


def test_against_oracle():
    rng = random.Random(33)
    for _ in range(60):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]), rng.choice([1, 5]))
        vc = len(min_vertex_cover(g))
        for cap in range(1, n + 1):
            inst = Instance(g, cap)
            res = solve_vc(inst)
            assert res.value == solve_exact(inst).value
            assert validate(inst, res.partition) is None
            assert value(inst, res.partition) == res.value
            with_edges = [c for c in res.partition.coalitions
                          if any(v in g.adj[u] for u, v in itertools.combinations(c, 2))]
            assert len(with_edges) <= vc


def test_supplied_cover(two_triangles):
    assert solve_vc(two_triangles, cover=range(6)).value == 6
    assert solve_vc(two_triangles, cover=[1, 2, 4, 5]).value == 6
    with pytest.raises(ValueError, match="not a vertex cover"):
        solve_vc(two_triangles, cover=[0])
