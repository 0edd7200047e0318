import random

import pytest

from ccf.core import Instance, WeightedGraph

# two triangles v1v2v3 and v4v5v6 joined by v2v5 and v3v6, shifted to 0..5
TWO_TRIANGLES_EDGES = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (2, 5), (3, 6)]


def two_triangles_graph() -> WeightedGraph:
    return WeightedGraph(6, tuple((a - 1, b - 1, 1) for a, b in TWO_TRIANGLES_EDGES))


def zero_based(*blocks):
    return [[v - 1 for v in b] for b in blocks]


def random_graph(rng: random.Random, n: int, p: float, wmax: int) -> WeightedGraph:
    edges = [(u, v, rng.randint(1, wmax)) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return WeightedGraph(n, tuple(edges))


@pytest.fixture
def two_triangles():
    return Instance(two_triangles_graph(), 4)


_acceptance_lines = []


@pytest.fixture
def criterion():
    def record(label, ok, detail=""):
        _acceptance_lines.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
