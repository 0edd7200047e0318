"""Graphs, C-partitions, partition value and Nash stability, plus the text formats."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence


class ParseError(ValueError):
    """Raised for malformed instance or result text."""


class PreconditionError(ValueError):
    """A solver was handed an input outside its contract (size limit, weighted input, ...)."""


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = []
        seen = set()
        for u, v, w in self.edges:
            u, v, w = int(u), int(v), int(w)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if w < 0:
                raise ValueError(f"negative weight {w} on edge ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            norm.append((key[0], key[1], w))
        object.__setattr__(self, "edges", tuple(norm))

    @cached_property
    def adj(self) -> list[dict[int, int]]:
        """adj[u][v] is the weight of edge uv."""
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for u, v, w in self.edges:
            adj[u][v] = w
            adj[v][u] = w
        return adj

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)

    def weight(self, u: int, v: int) -> int:
        return self.adj[u].get(v, 0)

    def is_unweighted(self) -> bool:
        return all(w == 1 for _, _, w in self.edges)

    def induced(self, keep: Sequence[int]) -> tuple["WeightedGraph", list[int]]:
        """Subgraph on `keep`, relabelled 0..len(keep)-1 in the given order.

        Returns the subgraph and the list mapping new labels back to old ones.
        """
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v], w) for u, v, w in self.edges if u in index and v in index]
        return WeightedGraph(len(keep), tuple(edges)), list(keep)


@dataclass(frozen=True)
class Instance:
    graph: WeightedGraph
    capacity: int

    def __post_init__(self):
        if self.capacity < 1:
            raise ValueError("capacity must be a positive integer")

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class CPartition:
    coalitions: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "CPartition":
        return cls(tuple(frozenset(b) for b in blocks))

    @classmethod
    def singletons(cls, n: int) -> "CPartition":
        return cls(tuple(frozenset([v]) for v in range(n)))

    def normalized(self) -> "CPartition":
        """Drop empty blocks; order blocks by their smallest vertex."""
        blocks = [b for b in self.coalitions if b]
        blocks.sort(key=min)
        return CPartition(tuple(blocks))

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.normalized().coalitions]

    def __len__(self):
        return len(self.coalitions)


@dataclass(frozen=True)
class SolveResult:
    value: int
    partition: CPartition
    solver: str
    elapsed: float = field(default=0.0, compare=False)


def _owner(n: int, p: CPartition) -> list[int]:
    owner = [-1] * n
    for i, block in enumerate(p.coalitions):
        for v in block:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range")
            if owner[v] != -1:
                raise ValueError(f"vertex {v} appears in more than one coalition")
            owner[v] = i
    for v, o in enumerate(owner):
        if o == -1:
            raise ValueError(f"vertex {v} is not in any coalition")
    return owner


def value(inst: Instance, p: CPartition) -> int:
    """Total weight of edges whose endpoints share a coalition.

    Raises ValueError when a vertex is missing or duplicated; sizes are
    not checked here (see `validate`).
    """
    owner = _owner(inst.n, p)
    return sum(w for u, v, w in inst.graph.edges if owner[u] == owner[v])


def validate(inst: Instance, p: CPartition) -> Optional[str]:
    """Return None if `p` is a C-partition of the instance, else the first violation."""
    seen: set[int] = set()
    for block in p.coalitions:
        if not block:
            return "empty coalition"
        if len(block) > inst.capacity:
            return f"coalition size {len(block)} > capacity {inst.capacity}"
        for v in block:
            if not 0 <= v < inst.n:
                return f"vertex {v} out of range"
            if v in seen:
                return f"vertex {v} appears twice"
            seen.add(v)
    if len(seen) != inst.n:
        missing = min(set(range(inst.n)) - seen)
        return f"uncovered vertex {missing}"
    return None


def nash_deviation(inst: Instance, p: CPartition) -> Optional[tuple[int, int]]:
    """Find a profitable single-agent move, or None if `p` is Nash-stable.

    Returns ``(vertex, target)`` where target indexes ``p.coalitions`` or is
    -1 for a fresh coalition.
    """
    owner = _owner(inst.n, p)
    sizes = [len(b) for b in p.coalitions]
    adj = inst.graph.adj
    for u in range(inst.n):
        gain: dict[int, int] = {}
        for v, w in adj[u].items():
            gain[owner[v]] = gain.get(owner[v], 0) + w
        here = gain.get(owner[u], 0)
        # a fresh coalition yields gain 0
        if here < 0:
            return u, -1
        for j, g in gain.items():
            if j != owner[u] and sizes[j] < inst.capacity and g > here:
                return u, j
    return None


def is_nash_stable(inst: Instance, p: CPartition) -> bool:
    return nash_deviation(inst, p) is None


# ---------------------------------------------------------------- text formats

def read_instance(text: str) -> Instance:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise ParseError(f"line {lineno}: second header")
            if len(parts) != 5 or parts[1] != "ccf":
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            try:
                header = tuple(int(x) for x in parts[2:])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed header {line!r}") from None
        elif parts[0] == "e":
            if header is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(parts) != 4:
                raise ParseError(f"line {lineno}: malformed edge {line!r}")
            try:
                edges.append(tuple(int(x) for x in parts[1:]))
            except ValueError:
                raise ParseError(f"line {lineno}: malformed edge {line!r}") from None
        else:
            raise ParseError(f"line {lineno}: unknown line type {parts[0]!r}")
    if header is None:
        raise ParseError("missing header")
    n, m, cap = header
    if n < 0 or m < 0 or cap < 1:
        raise ParseError(f"malformed header values n={n} m={m} C={cap}")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    try:
        return Instance(WeightedGraph(n, tuple(edges)), cap)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_instance(inst: Instance, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    g = inst.graph
    lines.append(f"p ccf {g.n} {g.m} {inst.capacity}")
    lines.extend(f"e {u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def result_to_dict(res: SolveResult, timing: bool = True) -> dict:
    return {
        "value": int(res.value),
        "coalitions": res.partition.as_lists(),
        "solver": res.solver,
        "elapsed_ms": int(round(res.elapsed * 1000)) if timing else 0,
    }


def write_result(res: SolveResult, timing: bool = True) -> str:
    return json.dumps(result_to_dict(res, timing))


def read_partition(text: str) -> CPartition:
    """Parse the coalitions out of a result JSON document."""
    try:
        doc = json.loads(text)
        blocks = doc["coalitions"]
        return CPartition.of([int(v) for v in b] for b in blocks)
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed partition: {exc}") from None
