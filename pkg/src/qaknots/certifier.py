"""Quasi-alternating certificates: search, guided construction, verification.

A certificate is a binary tree. Every node holds a Tait graph and its link
determinant. A branch node also names one edge of its graph; its two children
are the graphs obtained by deleting and by contracting that edge, and the
determinants must add up. Leaves are unknots or non-split alternating
diagrams.

Graphs stored in a certificate may differ from the exact deletion or
contraction by link-preserving simplification (nugatory untwisting and
Reidemeister-II cancellations) and by relabelling; the verifier accepts a
child when it matches the resolved graph up to these.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import CertificationFailed, InternalMismatch
from .exact_linalg import det_bareiss
from .families import INF, STAR, ZERO, ResolutionSpec, resolve_tracked
from .isomorphism import canonical_form, is_isomorphic
from .tait_graph import (
    ResolutionOutcome,
    SignedTaitGraph,
    contract_edge,
    delete_edge,
    goeritz_reduced,
    is_alternating,
    is_connected,
    reduce_nugatory,
    simplify_diagram,
)

BASE_UNKNOT = "unknot"
BASE_ALTERNATING = "alternating"
BRANCH = "branch"

CERT_FORMAT = "qaknots-certificate"
CERT_VERSION = 1


def link_det(g) -> int:
    """|det| of the Goeritz matrix with the outer region dropped; 0 for a split link."""
    if isinstance(g, ResolutionOutcome):
        if g.is_split:
            return 0
        g = g.graph
    if g is None:
        return 0
    return abs(det_bareiss(goeritz_reduced(g)))


def base_case(g: SignedTaitGraph) -> Optional[str]:
    """Leaf tag for an already simplified graph, or None."""
    if g.vertex_count == 1 and not g.edges:
        return BASE_UNKNOT
    if g.edges and is_connected(g) and is_alternating(g):
        return BASE_ALTERNATING
    return None


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 100_000
    max_depth: int = 10_000

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_depth < 1:
            raise ValueError("budget limits must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "SearchBudget":
        vals = {
            "max_nodes": int(os.environ.get("QAKNOTS_MAX_NODES", cls.max_nodes)),
            "max_depth": int(os.environ.get("QAKNOTS_MAX_DEPTH", cls.max_depth)),
        }
        vals.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**vals)


@dataclass(frozen=True)
class CertNode:
    graph: SignedTaitGraph
    det: int
    kind: str
    edge: Optional[Tuple[int, int, int, int]] = None
    child_delete: Optional["CertNode"] = None
    child_contract: Optional["CertNode"] = None
    label: Optional[str] = None

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "det": self.det, "graph": self.graph.to_dict()}
        if self.label:
            d["label"] = self.label
        if self.kind == BRANCH:
            d["edge"] = list(self.edge)
            d["delete"] = self.child_delete.to_dict()
            d["contract"] = self.child_contract.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CertNode":
        kind = d["kind"]
        graph = SignedTaitGraph.from_dict(d["graph"])
        if kind == BRANCH:
            return cls(graph, int(d["det"]), kind, tuple(int(x) for x in d["edge"]),
                       cls.from_dict(d["delete"]), cls.from_dict(d["contract"]),
                       d.get("label"))
        return cls(graph, int(d["det"]), kind, label=d.get("label"))

    def walk(self, path: str = "root") -> Iterator[Tuple[str, "CertNode"]]:
        yield path, self
        if self.kind == BRANCH:
            yield from self.child_delete.walk(path + ".delete")
            yield from self.child_contract.walk(path + ".contract")

    @property
    def size(self) -> int:
        return sum(1 for _ in self.walk())

    @property
    def depth(self) -> int:
        if self.kind != BRANCH:
            return 0
        return 1 + max(self.child_delete.depth, self.child_contract.depth)


@dataclass(frozen=True)
class Certificate:
    root: CertNode
    meta: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        d = {"format": CERT_FORMAT, "version": CERT_VERSION, "root": self.root.to_dict()}
        if self.meta:
            d["meta"] = self.meta
        return d

    def dumps(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        if d.get("format") != CERT_FORMAT:
            raise ValueError("not a qaknots certificate")
        return cls(CertNode.from_dict(d["root"]), d.get("meta", {}))

    @classmethod
    def loads(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


# -- unguided search ---------------------------------------------------------

def _distinct_edges(g: SignedTaitGraph) -> List[int]:
    """One representative id per parallel class; parallel copies resolve identically."""
    out, last = [], None
    for i, e in enumerate(g.edges):
        if e != last:
            out.append(i)
            last = e
    return out


class _Search:
    def __init__(self, budget: SearchBudget, memo: bool):
        self.budget = budget
        self.memo = memo
        self.nodes = 0
        self.proved: Dict[tuple, CertNode] = {}
        self.failed: Dict[tuple, int] = {}
        self.hit_depth_limit = False

    def candidates(self, h: SignedTaitGraph, det: int):
        found = []
        for eid in _distinct_edges(h):
            d_out = delete_edge(h, eid)
            c_out = contract_edge(h, eid)
            if d_out.is_split or c_out.is_split:
                continue
            d0, d1 = link_det(d_out), link_det(c_out)
            if d0 >= 1 and d1 >= 1 and d0 + d1 == det:
                found.append((max(d0, d1), eid, d_out.graph, c_out.graph, d0, d1))
        found.sort(key=lambda t: (t[0], t[1]))
        return found

    def prove(self, h: SignedTaitGraph, depth: int) -> Optional[CertNode]:
        """Certify a canonical, simplified graph; None when this branch fails."""
        key = (h.vertex_count, h.edges)
        if self.memo:
            hit = self.proved.get(key)
            if hit is not None:
                return hit
            if self.failed.get(key, -1) >= depth:
                return None
        det = link_det(h)
        tag = base_case(h)
        if tag is not None and det >= 1:
            node = CertNode(h, det, tag)
        elif det < 1:
            node = None
        elif depth <= 0:
            self.hit_depth_limit = True
            node = None
        else:
            self.nodes += 1
            if self.nodes > self.budget.max_nodes:
                raise CertificationFailed(
                    "BudgetExhausted",
                    f"expanded more than {self.budget.max_nodes} nodes; "
                    "this says nothing about whether the link is quasi-alternating",
                )
            node = None
            for _, eid, g0, g1, _d0, _d1 in self.candidates(h, det):
                n0 = self.prove(canonical_form(simplify_diagram(g0)), depth - 1)
                if n0 is None:
                    continue
                n1 = self.prove(canonical_form(simplify_diagram(g1)), depth - 1)
                if n1 is None:
                    continue
                node = CertNode(h, det, BRANCH, h.edge_ref(eid), n0, n1)
                break
        if self.memo:
            if node is not None:
                self.proved[key] = node
            else:
                self.failed[key] = max(self.failed.get(key, -1), depth)
        return node


def certify(g: SignedTaitGraph, budget: Optional[SearchBudget] = None,
            memo: bool = True) -> Certificate:
    """Search the resolutions of this diagram for a quasi-alternating certificate.

    Edges are tried in order of the larger child determinant, then edge id,
    so equal inputs give equal certificates. Raises
    :class:`CertificationFailed` with reason ``NoAdmissibleEdge`` (the root
    has no edge whose resolutions add up), ``BudgetExhausted`` or
    ``SearchExhausted``. None of these mean the link is not
    quasi-alternating: another diagram might still succeed.
    """
    budget = budget or SearchBudget()
    search = _Search(budget, memo)
    root = canonical_form(simplify_diagram(g))
    det = link_det(root)
    if base_case(root) is None and not search.candidates(root, det):
        raise CertificationFailed("NoAdmissibleEdge",
                                  f"no edge of the diagram (det {det}) splits additively")
    node = search.prove(root, budget.max_depth)
    if node is None:
        reason = "BudgetExhausted" if search.hit_depth_limit else "SearchExhausted"
        raise CertificationFailed(reason, "no certificate among this diagram's resolutions; "
                                          "the link may still be quasi-alternating")
    return Certificate(node, {"mode": "search", "expanded": search.nodes})


# -- guided construction following the induction on a ------------------------

class _Guided:
    def __init__(self, b: int, c: int, budget: SearchBudget):
        self.b, self.c = b, c
        self.budget = budget
        self.searched: List[str] = []
        self._cache: Dict[tuple, CertNode] = {}

    def spec(self, a: int, eps: str) -> ResolutionSpec:
        return ResolutionSpec(a, self.b, self.c, tuple(eps.split(",")))

    def resolved(self, a, eps):
        outcome, designated = resolve_tracked(self.spec(a, eps))
        if outcome.is_split:
            raise InternalMismatch(f"{self.spec(a, eps)} resolved to a split link")
        return outcome.graph, designated

    def leaf(self, a: int, eps: str) -> CertNode:
        """A member claimed alternating; searched instead if this diagram is not."""
        g, _ = self.resolved(a, eps)
        label = self.spec(a, eps).label
        tag = base_case(simplify_diagram(g))
        if tag is not None:
            return CertNode(g, link_det(g), tag, label=label)
        return self.searched_node(g, label)

    def searched_node(self, g: SignedTaitGraph, label: str) -> CertNode:
        sub = certify(g, self.budget).root
        self.searched.append(label)
        return CertNode(sub.graph, sub.det, sub.kind, sub.edge, sub.child_delete,
                        sub.child_contract, label=label + " (searched)")

    def branch(self, a: int, eps: str, i: int, child0: CertNode, child1: CertNode) -> CertNode:
        g, designated = self.resolved(a, eps)
        eid = designated[i]
        det = link_det(g)
        label = self.spec(a, eps).label
        if det != child0.det + child1.det:
            raise InternalMismatch(
                f"{label}: {det} != {child0.det} + {child1.det} at c_{i}")
        for outcome, child, what in ((delete_edge(g, eid), child0, "0"),
                                     (contract_edge(g, eid), child1, "inf")):
            if outcome.is_split or not _same_link_graph(outcome.graph, child.graph):
                raise InternalMismatch(f"{label}: {what}-resolution at c_{i} "
                                       f"does not match {child.label}")
        return CertNode(g, det, BRANCH, g.edge_ref(eid), child0, child1, label=label)

    def full(self, a: int) -> CertNode:
        """L(a: *,*,*), split at c_1."""
        key = ("full", a)
        if key not in self._cache:
            self._cache[key] = self.branch(a, "*,*,*", 1, self.zero(a), self.infinity(a))
        return self._cache[key]

    def zero(self, a: int) -> CertNode:
        """L(a: 0,*,*): c_2, then c_3 on the inf side."""
        key = ("zero", a)
        if key not in self._cache:
            inner = self.branch(a, "0,inf,*", 3, self.leaf(a, "0,inf,0"),
                                self.reduced_step(a, "0,inf,inf"))
            self._cache[key] = self.branch(a, "0,*,*", 2, self.leaf(a, "0,0,*"), inner)
        return self._cache[key]

    def infinity(self, a: int) -> CertNode:
        """L(a: inf,*,*): c_2, then c_3 on both sides."""
        key = ("inf", a)
        if key not in self._cache:
            left = self.branch(a, "inf,0,*", 3, self.leaf(a, "inf,0,0"),
                               self.reduced_step(a, "inf,0,inf"))
            if a == 1:
                g, _ = self.resolved(1, "inf,inf,inf")
                last = self.searched_node(g, self.spec(1, "inf,inf,inf").label)
            else:
                last = self.full(a - 1)
            right = self.branch(a, "inf,inf,*", 3, self.reduced_step(a, "inf,inf,0"), last)
            self._cache[key] = self.branch(a, "inf,*,*", 2, left, right)
        return self._cache[key]

    def reduced_step(self, a: int, eps: str) -> CertNode:
        """Members with one 0 and two infs: L(a-1: 0,*,*), or a leaf at a = 1."""
        if a == 1:
            return self.leaf(1, eps)
        return self.zero(a - 1)


def certify_guided(spec: ResolutionSpec, budget: Optional[SearchBudget] = None) -> Certificate:
    """Certificate built in the branching order of the induction on ``a``.

    ``spec.eps`` must be ``(*,*,*)``, ``(0,*,*)`` or ``(inf,*,*)``. Every
    determinant sum and every identification of a resolved member with a
    smaller-``a`` member is checked; a failure raises
    :class:`InternalMismatch`. At a = 1, members whose generated diagram is
    not alternating are certified by :func:`certify` instead.
    """
    budget = budget or SearchBudget()
    guide = _Guided(spec.b, spec.c, budget)
    if spec.eps == (STAR, STAR, STAR):
        root = guide.full(spec.a)
    elif spec.eps == (ZERO, STAR, STAR):
        root = guide.zero(spec.a)
    elif spec.eps == (INF, STAR, STAR):
        root = guide.infinity(spec.a)
    else:
        raise ValueError("guided certification starts from (*,*,*), (0,*,*) or (inf,*,*)")
    meta = {"mode": "guided", "spec": str(spec), "searched": sorted(set(guide.searched))}
    return Certificate(root, meta)


# -- verification ---------------------------------------------------------------

def _same_link_graph(g1: SignedTaitGraph, g2: SignedTaitGraph) -> bool:
    if is_isomorphic(g1, g2):
        return True
    r1, r2 = reduce_nugatory(g1), reduce_nugatory(g2)
    if is_isomorphic(r1, r2):
        return True
    return is_isomorphic(simplify_diagram(r1), simplify_diagram(r2))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: Optional[str] = None
    path: Optional[str] = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "valid"
        return f"{self.reason} at {self.path}: {self.detail}"


def verify_certificate(cert) -> Verdict:
    """Re-check every clause of a certificate from its stored graphs.

    Accepts a :class:`Certificate`, its dict form or its JSON text. The
    structural pass (positivity, determinant additivity) runs over the whole
    tree before any determinant is recomputed, so a tampered determinant is
    reported where the sum first breaks.
    """
    try:
        if isinstance(cert, str):
            cert = Certificate.loads(cert)
        elif isinstance(cert, dict):
            cert = Certificate.from_dict(cert)
    except (ValueError, KeyError, TypeError) as exc:
        return Verdict(False, "Malformed", "root", str(exc))
    nodes = list(cert.root.walk())

    for path, node in nodes:
        if node.kind not in (BASE_UNKNOT, BASE_ALTERNATING, BRANCH):
            return Verdict(False, "Malformed", path, f"unknown kind {node.kind!r}")
        if node.det < 1:
            return Verdict(False, "NonPositiveDet", path, f"det {node.det}")
        if node.kind == BRANCH:
            total = node.child_delete.det + node.child_contract.det
            if node.det != total:
                return Verdict(False, "AdditivityViolation", path,
                               f"{node.det} != {node.child_delete.det} + {node.child_contract.det}")

    checked = {}
    for path, node in nodes:
        child_graphs = ((node.child_delete.graph, node.child_contract.graph)
                        if node.kind == BRANCH else None)
        # the checks below read only these fields, so repeated subtrees are
        # checked once
        key = (node.graph, node.det, node.kind, node.edge, child_graphs)
        if key not in checked:
            checked[key] = _check_node(node)
        problem = checked[key]
        if problem is not None:
            return Verdict(False, problem[0], path, problem[1])
    return Verdict(True)


def _check_node(node: CertNode) -> Optional[Tuple[str, str]]:
    actual = abs(det_bareiss(goeritz_reduced(node.graph)))
    if actual != node.det:
        return "DetMismatch", f"claimed {node.det}, graph gives {actual}"
    if node.kind == BRANCH:
        try:
            eid = node.graph.edge_id(*node.edge)
        except (KeyError, TypeError) as exc:
            return "NoSuchEdge", str(exc)
        for outcome, child, what in ((delete_edge(node.graph, eid), node.child_delete, "delete"),
                                     (contract_edge(node.graph, eid), node.child_contract, "contract")):
            if outcome.is_split:
                return "ChildMismatch", f"{what} gives a split link"
            if not _same_link_graph(outcome.graph, child.graph):
                return "ChildMismatch", f"{what} child is not the resolved graph"
        return None
    s = simplify_diagram(node.graph)
    if node.kind == BASE_UNKNOT and not (s.vertex_count == 1 and not s.edges):
        return "BadLeaf", "not a trivial diagram"
    if node.kind == BASE_ALTERNATING and not (s.edges and is_connected(s) and is_alternating(s)):
        return "BadLeaf", "not a non-split alternating diagram"
    return None
