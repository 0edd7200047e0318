import random

import pytest

from ccf.core import Instance, WeightedGraph, validate, value
from ccf.dp_tw import DpEntry, forget_step, introduce_step, join_step, leaf_entry, solve_tw, table_sizes
from ccf.oracle import solve_exact
from ccf.treedec import decompose, make_nice

from conftest import two_triangles_graph, random_graph


def star(leaves):
    return WeightedGraph(leaves + 1, tuple((0, i, 1) for i in range(1, leaves + 1)))


def test_examples(two_triangles):
    assert solve_tw(two_triangles).value == 6
    assert solve_tw(two_triangles, canonical=True).value == 6
    assert solve_tw(Instance(star(4), 3)).value == 2
    g = random_graph(random.Random(1), 8, 0.6, 5)
    assert solve_tw(Instance(g, 1)).value == 0


def test_leaf_entry():
    e = leaf_entry(3)
    assert e == DpEntry((), (0, 0, 0), 0) == leaf_entry(3)
    assert e.coloring == {}


# vertices a=0, b=1; colour "1" of the worked example is colour 0 here
AB = WeightedGraph(2, ((0, 1, 7),))


def test_introduce_joins_colour():
    e = DpEntry(((0, 0),), (1, 0), 0)
    out = introduce_step(e, 1, {0, 1}, AB, cap=2)
    same = [x for x in out if x.coloring[1] == 0]
    assert len(same) == 1
    assert same[0].sizes == (2, 0) and same[0].value == 7
    fresh = [x for x in out if x.coloring[1] == 1]
    assert fresh[0].sizes == (1, 1) and fresh[0].value == 0


def test_introduce_skips_full_colour():
    e = DpEntry(((0, 0),), (2, 0), 0)
    out = introduce_step(e, 1, {0, 1}, AB, cap=2)
    assert [x.coloring[1] for x in out] == [1]


def test_introduce_isolated_vertex():
    g = WeightedGraph(3, ((0, 1, 4),))
    e = DpEntry(((0, 0), (1, 1)), (1, 1, 0), 0)
    out = introduce_step(e, 2, {0, 1, 2}, g, cap=3)
    assert len(out) == 3
    assert all(x.value == 0 for x in out)


def test_introduce_canonical_offers_one_free_colour():
    e = DpEntry(((0, 0),), (1, 0, 0), 0)
    assert len(introduce_step(e, 1, {0, 1}, AB, cap=2)) == 3
    assert len(introduce_step(e, 1, {0, 1}, AB, cap=2, canonical=True)) == 2


def test_introduce_rejects_coloured_vertex():
    with pytest.raises(ValueError):
        introduce_step(DpEntry(((0, 0),), (1, 0), 0), 0, {0}, AB, cap=2)


def test_forget_closes_last_member():
    e = DpEntry(((9, 3),), (0, 0, 0, 5), 11)
    out = forget_step(e, 9, set())
    assert out.sizes == (0, 0, 0, 0)
    assert out.value == 11
    assert out.link[2] == ("closed", 3, 5)


def test_forget_keeps_shared_colour():
    e = DpEntry(((0, 2), (1, 2)), (0, 0, 3), 4)
    out = forget_step(e, 1, {0})
    assert out.sizes == (0, 0, 3) and out.value == 4
    assert out.coloring == {0: 2}
    assert out.link[2] is None


def test_join_subtracts_shared_edges():
    g = WeightedGraph(2, ((0, 1, 3),))
    e = DpEntry(((0, 1), (1, 1)), (0, 2), 3)
    out = join_step(e, e, {0, 1}, g, cap=4)
    assert out.value == 3 and out.sizes == (0, 2)


def test_join_rejects_disagreement():
    g = WeightedGraph(2, ((0, 1, 3),))
    e1 = DpEntry(((0, 0), (1, 1)), (1, 1), 0)
    e2 = DpEntry(((0, 1), (1, 1)), (0, 2), 3)
    assert join_step(e1, e2, {0, 1}, g, cap=4) is None


def test_join_rejects_over_capacity():
    g = WeightedGraph(1)
    e = DpEntry(((0, 0),), (4,), 0)
    assert join_step(e, e, {0}, g, cap=6) is None
    assert join_step(e, e, {0}, g, cap=7).sizes == (7,)


def test_table_size_bound():
    rng = random.Random(6)
    for _ in range(15):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, 0.5, 3)
        cap = rng.randint(1, 4)
        ntd = make_nice(decompose(g))
        w = ntd.width
        bound = (w + 1) ** (w + 1) * (cap + 1) ** (w + 1)
        assert max(table_sizes(Instance(g, cap), ntd)) <= bound


def test_keep_all_same_optimum():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 6)
        g = random_graph(rng, n, 0.5, 4)
        inst = Instance(g, rng.randint(1, n))
        assert solve_tw(inst, keep_all=True).value == solve_tw(inst).value


def test_against_oracle_both_modes():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]), rng.choice([1, 5]))
        ntd = make_nice(decompose(g))
        for cap in range(1, n + 1):
            inst = Instance(g, cap)
            opt = solve_exact(inst).value
            modes = [True] + ([False] if ntd.width <= 3 else [])
            for canonical in modes:
                res = solve_tw(inst, ntd, canonical=canonical)
                assert res.value == opt
                assert validate(inst, res.partition) is None
                assert value(inst, res.partition) == opt


def test_two_triangles_partition_is_an_optimum(two_triangles):
    res = solve_tw(two_triangles)
    assert validate(two_triangles, res.partition) is None
    assert value(two_triangles, res.partition) == 6
    assert all(len(c) <= 4 for c in res.partition.coalitions)


def test_empty_graph():
    res = solve_tw(Instance(WeightedGraph(0), 2))
    assert res.value == 0 and res.partition.coalitions == ()


def test_forest_literal_is_fast_enough():
    rng = random.Random(3)
    n = 60
    edges = tuple((v, rng.randrange(v), rng.randint(1, 3)) for v in range(1, n))
    g = WeightedGraph(n, edges)
    inst = Instance(g, 3)
    assert solve_tw(inst).value == solve_tw(inst, canonical=True).value


def test_two_triangles_graph_width():
    assert make_nice(decompose(two_triangles_graph())).width == 2
