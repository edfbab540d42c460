"""Isomorphism and canonical labelling for signed multigraphs.

Two graphs are isomorphic when a vertex bijection carries, for every
unordered vertex pair (loops included), the number of +1 edges and the
number of -1 edges onto the same counts. The outer-region marking is
ignored.

Both routines start from colour refinement. :func:`canonical_form` then
individualizes vertices and keeps the lexicographically smallest relabelled
edge list over all leaves of the search tree; :func:`is_isomorphic` instead
backtracks a vertex map within refinement classes. The two share only the
refinement step.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .tait_graph import SignedTaitGraph

# (pos, neg) edge counts per ordered vertex pair
Adjacency = List[Dict[int, Tuple[int, int]]]


def _adjacency(g: SignedTaitGraph) -> Adjacency:
    adj: Adjacency = [dict() for _ in range(g.vertex_count)]
    for u, v, s in g.edges:
        for x, y in ((u, v), (v, u)) if u != v else ((u, u),):
            p, n = adj[x].get(y, (0, 0))
            adj[x][y] = (p + 1, n) if s > 0 else (p, n + 1)
    return adj


def _refine(adj: Adjacency, colors: List[int]) -> List[int]:
    """Colour refinement until the partition is stable.

    New colours are ranks of sorted signatures, so the result depends only
    on the isomorphism type of (graph, initial colouring).
    """
    n = len(adj)
    while True:
        sigs = []
        for x in range(n):
            loops = adj[x].get(x, (0, 0))
            nbrs = sorted((colors[y], cnt) for y, cnt in adj[x].items() if y != x)
            sigs.append((colors[x], loops, tuple(nbrs)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _initial_colors(adj: Adjacency) -> List[int]:
    base = []
    for x, row in enumerate(adj):
        pos = sum(p for y, (p, _) in row.items() if y != x)
        neg = sum(m for y, (_, m) in row.items() if y != x)
        base.append((pos, neg, row.get(x, (0, 0))))
    ranks = {s: i for i, s in enumerate(sorted(set(base)))}
    return [ranks[s] for s in base]


def _relabelled_edges(g: SignedTaitGraph, perm: List[int]) -> Tuple:
    return tuple(sorted(
        (min(perm[u], perm[v]), max(perm[u], perm[v]), s) for u, v, s in g.edges
    ))


def canonical_labelling(g: SignedTaitGraph) -> List[int]:
    """A permutation ``perm`` (old index -> new index) giving the canonical form."""
    adj = _adjacency(g)
    n = g.vertex_count
    best: list = [None, None]

    def search(colors):
        colors = _refine(adj, colors)
        if len(set(colors)) == n:
            enc = _relabelled_edges(g, colors)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, list(colors)
            return
        # smallest non-singleton cell, ties to the lowest colour
        sizes: Dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        for x in range(n):
            if colors[x] == target:
                # individualize x: it sorts strictly before the rest of its cell
                trial = [2 * c + (1 if c == target and y != x else 0)
                         for y, c in enumerate(colors)]
                search(trial)

    search(_initial_colors(adj))
    return best[1]


def canonical_form(g: SignedTaitGraph) -> SignedTaitGraph:
    """Isomorphism-invariant relabelling of ``g``; its outer vertex is set to 0."""
    perm = canonical_labelling(g)
    return SignedTaitGraph(g.vertex_count, 0, _relabelled_edges(g, perm))


def canonical_key(g: SignedTaitGraph) -> Tuple:
    """Hashable key equal for two graphs exactly when they are isomorphic."""
    h = canonical_form(g)
    return (h.vertex_count, h.edges)


def find_isomorphism(g1: SignedTaitGraph, g2: SignedTaitGraph) -> Optional[List[int]]:
    """A vertex map from ``g1`` onto ``g2`` preserving signed multiplicities, or None."""
    if g1.vertex_count != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return None
    if sorted(s for *_, s in g1.edges) != sorted(s for *_, s in g2.edges):
        return None
    n = g1.vertex_count
    adj1, adj2 = _adjacency(g1), _adjacency(g2)
    # refine the disjoint union so colours are comparable across the two graphs
    union: Adjacency = [dict(r) for r in adj1] + [{y + n: c for y, c in r.items()} for r in adj2]
    colors = _refine(union, _initial_colors(union))
    c1, c2 = colors[:n], colors[n:]
    if sorted(c1) != sorted(c2):
        return None
    candidates = {}
    for y in range(n):
        candidates.setdefault(c2[y], []).append(y)
    # most constrained vertices first, neighbours of placed vertices early
    order = sorted(range(n), key=lambda x: (len(candidates[c1[x]]), c1[x], x))
    mapping = [-1] * n
    used = [False] * n

    def consistent(x, y):
        if adj1[x].get(x, (0, 0)) != adj2[y].get(y, (0, 0)):
            return False
        for x2, cnt in adj1[x].items():
            if x2 != x and mapping[x2] >= 0 and adj2[y].get(mapping[x2]) != cnt:
                return False
        placed_nbrs = sum(1 for x2 in adj1[x] if x2 != x and mapping[x2] >= 0)
        placed_nbrs2 = sum(1 for y2 in adj2[y] if y2 != y and used[y2])
        return placed_nbrs == placed_nbrs2

    def extend(k):
        if k == n:
            return True
        x = order[k]
        for y in candidates[c1[x]]:
            if not used[y] and consistent(x, y):
                mapping[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                mapping[x] = -1
                used[y] = False
        return False

    return list(mapping) if extend(0) else None


def is_isomorphic(g1: SignedTaitGraph, g2: SignedTaitGraph) -> bool:
    if g1.vertex_count == g2.vertex_count and g1.edges == g2.edges:
        return True
    return find_isomorphism(g1, g2) is not None
