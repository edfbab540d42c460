"""Signed Tait graphs of link diagrams.

Vertices are the white regions of a checkerboard-coloured diagram (the
unbounded one included), edges are crossings carrying a sign of +1 or -1.
Graphs are immutable; every operation returns a new value.

Edges are kept sorted (each as ``(u, v, sign)`` with ``u <= v``), so an edge
id is simply a position in :attr:`SignedTaitGraph.edges`, and two graphs with
the same edge multiset compare equal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import BadSign, IndexOutOfRange, NoSuchEdge

Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class SignedTaitGraph:
    vertex_count: int
    outer: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise IndexOutOfRange("a Tait graph needs at least one vertex")
        if not 0 <= self.outer < self.vertex_count:
            raise IndexOutOfRange(f"outer vertex {self.outer} out of range")
        norm = []
        for e in self.edges:
            u, v, s = e
            if s not in (1, -1):
                raise BadSign(f"edge sign must be +1 or -1, got {s!r}")
            for x in (u, v):
                if not 0 <= x < self.vertex_count:
                    raise IndexOutOfRange(
                        f"vertex {x} out of range for {self.vertex_count} vertices"
                    )
            norm.append((min(u, v), max(u, v), s))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge(self, e: int) -> Edge:
        if not isinstance(e, int) or not 0 <= e < len(self.edges):
            raise NoSuchEdge(e)
        return self.edges[e]

    def edge_id(self, u: int, v: int, sign: int, index: int = 0) -> int:
        """Id of the ``index``-th parallel copy of edge ``(u, v, sign)``."""
        key = (min(u, v), max(u, v), sign)
        seen = 0
        for i, e in enumerate(self.edges):
            if e == key:
                if seen == index:
                    return i
                seen += 1
        raise NoSuchEdge(f"no edge {key} with parallel index {index}")

    def edge_ref(self, e: int) -> Tuple[int, int, int, int]:
        """Label-level reference ``(u, v, sign, parallel_index)`` for edge ``e``."""
        u, v, s = self.edge(e)
        return (u, v, s, self.edges[:e].count((u, v, s)))

    def negated(self) -> "SignedTaitGraph":
        return SignedTaitGraph(self.vertex_count, self.outer,
                               tuple((u, v, -s) for u, v, s in self.edges))

    def to_dict(self) -> dict:
        return {"vertices": self.vertex_count, "outer": self.outer,
                "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, d: dict) -> "SignedTaitGraph":
        return new_graph(int(d["vertices"]), int(d.get("outer", 0)),
                         [tuple(int(x) for x in e) for e in d["edges"]])

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    @classmethod
    def loads(cls, text: str) -> "SignedTaitGraph":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class ResolutionOutcome:
    """Result of smoothing a crossing: either a graph or a split link."""

    graph: Optional[SignedTaitGraph]

    @property
    def is_split(self) -> bool:
        return self.graph is None

    @property
    def kind(self) -> str:
        return "split" if self.graph is None else "graph"


SPLIT = ResolutionOutcome(None)


def new_graph(vertex_count: int, outer: int, edges: Iterable[Sequence[int]]) -> SignedTaitGraph:
    if not isinstance(vertex_count, int) or vertex_count < 1:
        raise IndexOutOfRange("vertex_count must be a positive integer")
    return SignedTaitGraph(vertex_count, outer, tuple(tuple(e) for e in edges))


def unknot_graph() -> SignedTaitGraph:
    return SignedTaitGraph(1, 0, ())


def components(g: SignedTaitGraph) -> List[List[int]]:
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups = {}
    for x in range(g.vertex_count):
        groups.setdefault(find(x), []).append(x)
    return list(groups.values())


def is_connected(g: SignedTaitGraph) -> bool:
    return len(components(g)) == 1


def is_alternating(g: SignedTaitGraph) -> bool:
    return len({s for _, _, s in g.edges}) <= 1


def _without(g: SignedTaitGraph, e: int) -> Tuple[Edge, ...]:
    return g.edges[:e] + g.edges[e + 1:]


def delete_edge(g: SignedTaitGraph, e: int) -> ResolutionOutcome:
    g.edge(e)
    h = SignedTaitGraph(g.vertex_count, g.outer, _without(g, e))
    if not is_connected(h):
        return SPLIT
    return ResolutionOutcome(h)


def contraction_map(vertex_count: int, u: int, v: int) -> List[int]:
    """Where each vertex lands when ``u`` and ``v`` are merged.

    The merged vertex keeps the smaller index; the indices above the larger
    one shift down by one.
    """
    lo, hi = min(u, v), max(u, v)
    out = []
    for x in range(vertex_count):
        if x == hi:
            out.append(lo)
        elif x > hi:
            out.append(x - 1)
        else:
            out.append(x)
    return out


def contract_edge(g: SignedTaitGraph, e: int) -> ResolutionOutcome:
    u, v, _ = g.edge(e)
    if u == v:
        # smoothing a kink the other way leaves a disjoint circle
        return SPLIT
    m = contraction_map(g.vertex_count, u, v)
    edges = tuple((m[a], m[b], s) for a, b, s in _without(g, e))
    return ResolutionOutcome(SignedTaitGraph(g.vertex_count - 1, m[g.outer], edges))


def bridges(g: SignedTaitGraph) -> List[int]:
    """Ids of cut edges (non-loop edges whose removal disconnects their ends)."""
    n = g.vertex_count
    adj = [[] for _ in range(n)]
    for i, (u, v, _) in enumerate(g.edges):
        if u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))
    disc = [-1] * n
    low = [0] * n
    out = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            x, via, it = stack[-1]
            for y, i in it:
                if i == via:
                    continue
                if disc[y] < 0:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, i, iter(adj[y])))
                    break
                low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if stack:
                    px = stack[-1][0]
                    low[px] = min(low[px], low[x])
                    if low[x] > disc[px]:
                        out.append(via)
    return sorted(out)


def reduce_nugatory(g: SignedTaitGraph) -> SignedTaitGraph:
    """Remove loops and contract cut edges until neither remains.

    Both moves are Reidemeister-I untwistings, so the link and its
    determinant are unchanged.
    """
    while True:
        loops = [i for i, (u, v, _) in enumerate(g.edges) if u == v]
        if loops:
            keep = tuple(e for e in g.edges if e[0] != e[1])
            g = SignedTaitGraph(g.vertex_count, g.outer, keep)
            continue
        cut = bridges(g)
        if not cut:
            return g
        g = contract_edge(g, cut[0]).graph


def _reidemeister2_step(g: SignedTaitGraph) -> Optional[SignedTaitGraph]:
    """Apply one Reidemeister-II cancellation if the graph offers one.

    Two moves qualify: a pair of parallel edges of opposite sign (deleted
    together, unless that disconnects the graph), and a vertex whose only two
    edges have opposite signs and lead to distinct neighbours (both edges
    contracted, merging the neighbours through it).
    """
    seen = {}
    for i, (u, v, s) in enumerate(g.edges):
        if u == v:
            continue
        j = seen.get((u, v, -s))
        if j is not None:
            keep = tuple(e for k, e in enumerate(g.edges) if k not in (i, j))
            h = SignedTaitGraph(g.vertex_count, g.outer, keep)
            if is_connected(h):
                return h
        seen.setdefault((u, v, s), i)
    incident = [[] for _ in range(g.vertex_count)]
    for i, (u, v, _) in enumerate(g.edges):
        incident[u].append(i)
        if v != u:
            incident[v].append(i)
    for x in range(g.vertex_count):
        if len(incident[x]) != 2:
            continue
        (u1, v1, s1), (u2, v2, s2) = (g.edges[i] for i in incident[x])
        if s1 == s2 or u1 == v1 or u2 == v2:
            continue
        y, z = u1 + v1 - x, u2 + v2 - x
        if y == z:
            continue
        first = contract_edge(g, incident[x][0]).graph
        m = contraction_map(g.vertex_count, u1, v1)
        return contract_edge(first, first.edge_id(m[u2], m[v2], s2)).graph
    return None


def simplify_diagram(g: SignedTaitGraph) -> SignedTaitGraph:
    """Nugatory reduction interleaved with Reidemeister-II cancellations.

    The link type, and so the determinant, is unchanged. Used to recognise
    alternating leaves whose generated graph carries cancelling crossing
    pairs.
    """
    g = reduce_nugatory(g)
    while True:
        h = _reidemeister2_step(g)
        if h is None:
            return g
        g = reduce_nugatory(h)


def goeritz_unreduced(g: SignedTaitGraph) -> List[List[int]]:
    """Goeritz matrix over all vertices.

    Off-diagonal entries sum the signs of the edges joining two regions; a
    diagonal entry is minus the sum over non-loop edges at that region, so
    every row sums to zero. Loops contribute nothing.
    """
    n = g.vertex_count
    G = [[0] * n for _ in range(n)]
    for u, v, s in g.edges:
        if u == v:
            continue
        G[u][v] += s
        G[v][u] += s
        G[u][u] -= s
        G[v][v] -= s
    return G


def goeritz_reduced(g: SignedTaitGraph, drop: Optional[int] = None) -> List[List[int]]:
    if drop is None:
        drop = g.outer
    if not 0 <= drop < g.vertex_count:
        raise IndexOutOfRange(f"cannot drop vertex {drop}")
    G = goeritz_unreduced(g)
    return [row[:drop] + row[drop + 1:] for i, row in enumerate(G) if i != drop]
