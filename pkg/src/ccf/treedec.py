"""Tree decompositions: min-fill heuristic, conversion to nice form, validation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import WeightedGraph

LEAF, INTRODUCE, FORGET, JOIN = "leaf", "introduce", "forget", "join"


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[int], ...]
    parent: tuple[int, ...]  # -1 marks the root
    root: int

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def children(self) -> list[list[int]]:
        ch: list[list[int]] = [[] for _ in self.bags]
        for i, p in enumerate(self.parent):
            if p >= 0:
                ch[p].append(i)
        return ch


@dataclass(frozen=True)
class NiceNode:
    kind: str
    bag: frozenset[int]
    children: tuple[int, ...] = ()
    vertex: Optional[int] = None  # introduced / forgotten vertex


@dataclass(frozen=True)
class NiceTreeDecomposition:
    """Nodes are stored in post-order, so children always precede their parent."""

    nodes: tuple[NiceNode, ...]
    root: int

    @property
    def width(self) -> int:
        return max((len(t.bag) for t in self.nodes), default=0) - 1

    def dump(self) -> str:
        out: list[str] = []
        stack = [(self.root, 0)]
        while stack:
            i, depth = stack.pop()
            t = self.nodes[i]
            extra = f" v={t.vertex}" if t.vertex is not None else ""
            out.append(f"{'  ' * depth}{i} {t.kind}{extra} {sorted(t.bag)}")
            stack.extend((c, depth + 1) for c in reversed(t.children))
        return "\n".join(out)


def min_fill_order(g: WeightedGraph) -> list[int]:
    """Elimination order by fewest fill edges, ties by smallest degree, then label."""
    nbrs = [set(a) for a in g.adj]
    alive = set(range(g.n))
    order = []
    while alive:
        best = None
        for v in sorted(alive):
            ns = list(nbrs[v])
            fill = 0
            for i, a in enumerate(ns):
                na = nbrs[a]
                for b in ns[i + 1:]:
                    if b not in na:
                        fill += 1
            key = (fill, len(ns), v)
            if best is None or key < best:
                best = key
        v = best[2]
        ns = list(nbrs[v])
        for i, a in enumerate(ns):
            for b in ns[i + 1:]:
                nbrs[a].add(b)
                nbrs[b].add(a)
        for a in ns:
            nbrs[a].discard(v)
        alive.remove(v)
        order.append(v)
    return order


def decompose(g: WeightedGraph, order: Optional[list[int]] = None) -> TreeDecomposition:
    """Tree decomposition from an elimination order (min-fill by default).

    Node i holds the bag of the i-th eliminated vertex. Its parent is the node of
    the earliest-eliminated vertex among its later neighbours; components are
    chained under the last node so the result is a single tree.
    """
    if order is None:
        order = min_fill_order(g)
    if not order:
        return TreeDecomposition((frozenset(),), (-1,), 0)
    pos = {v: i for i, v in enumerate(order)}
    nbrs = [set(a) for a in g.adj]
    bags = []
    parent = []
    for i, v in enumerate(order):
        later = {u for u in nbrs[v] if pos[u] > i}
        bags.append(frozenset(later | {v}))
        parent.append(min((pos[u] for u in later), default=-1))
        ls = list(later)
        for a_i, a in enumerate(ls):
            for b in ls[a_i + 1:]:
                nbrs[a].add(b)
                nbrs[b].add(a)
    root = len(order) - 1
    for i in range(len(order) - 1):
        if parent[i] == -1:
            parent[i] = root
    return TreeDecomposition(tuple(bags), tuple(parent), root)


def validate_td(g: WeightedGraph, td: TreeDecomposition) -> Optional[str]:
    nb = len(td.bags)
    if len(td.parent) != nb or not 0 <= td.root < nb or td.parent[td.root] != -1:
        return "malformed tree"
    # the parent links must form a single tree rooted at td.root
    ch = td.children()
    seen = {td.root}
    stack = [td.root]
    while stack:
        for c in ch[stack.pop()]:
            if c in seen:
                return "malformed tree: cycle"
            seen.add(c)
            stack.append(c)
    if len(seen) != nb:
        return "malformed tree: not connected"
    return _check_bags(g, [t for t in td.bags], [ch[i] for i in range(nb)], td.root)


def _check_bags(g, bags, children, root) -> Optional[str]:
    for u, v, _ in g.edges:
        if not any(u in b and v in b for b in bags):
            return f"uncovered edge ({u}, {v})"
    for v in range(g.n):
        holders = {i for i, b in enumerate(bags) if v in b}
        if not holders:
            return f"vertex {v} in no bag"
        # connected iff exactly one holder has a parent outside the holder set
        tops = len(holders)
        for i in holders:
            for c in children[i]:
                if c in holders:
                    tops -= 1
        if tops != 1:
            return f"bags holding vertex {v} are not connected"
    return None


def make_nice(td: TreeDecomposition, g: Optional[WeightedGraph] = None) -> NiceTreeDecomposition:
    if g is not None:
        err = validate_td(g, td)
        if err:
            raise ValueError(f"invalid tree decomposition: {err}")
    nodes: list[NiceNode] = []

    def add(kind, bag, children=(), vertex=None):
        nodes.append(NiceNode(kind, frozenset(bag), tuple(children), vertex))
        return len(nodes) - 1

    def walk(top: int, bottom_bag: frozenset, target: frozenset) -> int:
        # forget what the parent does not hold, then introduce what it adds
        cur = top
        bag = set(bottom_bag)
        for v in sorted(bottom_bag - target):
            bag.discard(v)
            cur = add(FORGET, bag, (cur,), v)
        for v in sorted(target - bottom_bag):
            bag.add(v)
            cur = add(INTRODUCE, bag, (cur,), v)
        return cur

    ch = td.children()
    built: dict[int, int] = {}
    # iterative post-order over the original tree
    stack = [(td.root, False)]
    while stack:
        i, done = stack.pop()
        if not done:
            stack.append((i, True))
            stack.extend((c, False) for c in reversed(ch[i]))
            continue
        bag = td.bags[i]
        if not ch[i]:
            built[i] = walk(add(LEAF, ()), frozenset(), bag)
            continue
        subs = [walk(built[c], td.bags[c], bag) for c in ch[i]]
        cur = subs[0]
        for other in subs[1:]:
            cur = add(JOIN, bag, (cur, other))
        built[i] = cur
    root = walk(built[td.root], td.bags[td.root], frozenset())
    return NiceTreeDecomposition(tuple(nodes), root)


def validate_nice(g: WeightedGraph, ntd: NiceTreeDecomposition) -> Optional[str]:
    """None when `ntd` is a valid nice tree decomposition of `g`, else the violation."""
    nodes = ntd.nodes
    if not nodes or not 0 <= ntd.root < len(nodes):
        return "malformed tree"
    if nodes[ntd.root].bag:
        return "root bag is not empty"
    parent = [-1] * len(nodes)
    for i, t in enumerate(nodes):
        for c in t.children:
            if not 0 <= c < len(nodes) or parent[c] != -1 or c == i:
                return "malformed tree"
            parent[c] = i
    seen = {ntd.root}
    stack = [ntd.root]
    while stack:
        for c in nodes[stack.pop()].children:
            if c in seen:
                return "malformed tree: cycle"
            seen.add(c)
            stack.append(c)
    if len(seen) != len(nodes):
        return "malformed tree: not connected"
    for i, t in enumerate(nodes):
        kids = [nodes[c] for c in t.children]
        if t.kind == LEAF:
            ok = not kids and not t.bag
        elif t.kind == INTRODUCE:
            ok = (len(kids) == 1 and t.vertex in t.bag and t.vertex not in kids[0].bag
                  and t.bag == kids[0].bag | {t.vertex})
        elif t.kind == FORGET:
            ok = (len(kids) == 1 and t.vertex not in t.bag and t.vertex in kids[0].bag
                  and kids[0].bag == t.bag | {t.vertex})
        elif t.kind == JOIN:
            ok = len(kids) == 2 and kids[0].bag == t.bag == kids[1].bag
        else:
            ok = False
        if not ok:
            return f"node {i} violates the {t.kind} node taxonomy"
    return _check_bags(g, [t.bag for t in nodes], [t.children for t in nodes], ntd.root)
