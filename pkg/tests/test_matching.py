import itertools
import random

import pytest

from ccf.matching import BipartiteGraph, max_cardinality_matching, max_weight_matching


def brute_matchings(b: BipartiteGraph):
    """All matchings, as lists of edges, by exhaustive subset search over edges."""
    edges = list(b.edges)

    def rec(i, used_l, used_r, cur):
        if i == len(edges):
            yield list(cur)
            return
        yield from rec(i + 1, used_l, used_r, cur)
        x, y, _ = edges[i]
        if x not in used_l and y not in used_r:
            cur.append(edges[i])
            yield from rec(i + 1, used_l | {x}, used_r | {y}, cur)
            cur.pop()

    yield from rec(0, frozenset(), frozenset(), [])


def random_bipartite(rng, maxl, maxr, p, wmax):
    left, right = rng.randint(0, maxl), rng.randint(0, maxr)
    edges = tuple((x, y, rng.randint(0, wmax)) for x in range(left) for y in range(right) if rng.random() < p)
    return BipartiteGraph(left, right, edges)


def is_matching(pairs):
    return len({x for x, _ in pairs}) == len(pairs) == len({y for _, y in pairs})


def test_weight_examples():
    assert max_weight_matching(BipartiteGraph(1, 1, ((0, 0, 5),))) == (5, [(0, 0)])
    b = BipartiteGraph(2, 2, ((0, 0, 3), (0, 1, 2), (1, 0, 2), (1, 1, 3)))
    assert max_weight_matching(b)[0] == 6
    assert max_weight_matching(BipartiteGraph(3, 0)) == (0, [])


def test_weight_prefers_heavy_edge_over_cardinality():
    b = BipartiteGraph(2, 2, ((0, 0, 10), (0, 1, 1), (1, 0, 1)))
    total, pairs = max_weight_matching(b)
    assert total == 10 and pairs == [(0, 0)]


def test_weight_matches_brute_force():
    rng = random.Random(21)
    for _ in range(200):
        b = random_bipartite(rng, 5, 5, 0.5, 9)
        total, pairs = max_weight_matching(b)
        w = {(x, y): c for x, y, c in b.edges}
        assert is_matching(pairs)
        assert all(p in w for p in pairs)
        assert total == sum(w[p] for p in pairs)
        assert total == max(sum(e[2] for e in m) for m in brute_matchings(b))
        assert all(total >= c for c in w.values())


def test_cardinality_examples():
    k22 = BipartiteGraph(2, 2, tuple((x, y, 1) for x in range(2) for y in range(2)))
    size, pairs, free = max_cardinality_matching(k22)
    assert size == 2 and free == []
    size, pairs, free = max_cardinality_matching(BipartiteGraph(1, 3, ((0, 0, 1), (0, 1, 1), (0, 2, 1))))
    assert size == 1 and len(free) == 2


def test_cardinality_matches_brute_force():
    rng = random.Random(22)
    for _ in range(200):
        b = random_bipartite(rng, 8, 8, rng.choice([0.15, 0.3, 0.6]), 1)
        size, pairs, free = max_cardinality_matching(b)
        assert is_matching(pairs) and size == len(pairs)
        assert size <= min(b.left, b.right)
        matched_r = {y for _, y in pairs}
        assert free == [y for y in range(b.right) if y not in matched_r]
        best = max(len(m) for m in brute_matchings(b)) if b.edges else 0
        assert size == best


def test_cardinality_against_koenig_cover():
    # size of a maximum matching equals the size of a minimum vertex cover
    rng = random.Random(23)
    for _ in range(40):
        b = random_bipartite(rng, 5, 5, 0.4, 1)
        nodes = [("l", x) for x in range(b.left)] + [("r", y) for y in range(b.right)]
        cover = next(k for k in range(len(nodes) + 1) for s in itertools.combinations(nodes, k)
                     if all(("l", x) in s or ("r", y) in s for x, y, _ in b.edges))
        assert max_cardinality_matching(b)[0] == cover


@pytest.mark.parametrize("edges, msg", [
    (((0, 1, 1),), "out of range"),
    (((0, 0, 1), (0, 0, 2)), "duplicate"),
    (((0, 0, -1),), "negative"),
])
def test_bipartite_validation(edges, msg):
    with pytest.raises(ValueError, match=msg):
        BipartiteGraph(1, 1, edges)


def test_cardinality_large_is_quick():
    rng = random.Random(24)
    left, right = 300, 600
    edges = tuple((x, y, 1) for x in range(left) for y in rng.sample(range(right), 5))
    size, pairs, free = max_cardinality_matching(BipartiteGraph(left, right, edges))
    assert is_matching(pairs) and size == len(pairs) and len(free) == right - size
