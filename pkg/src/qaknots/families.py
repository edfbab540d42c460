"""Tait graphs of the pretzel-quotient link family and its resolutions.

The family link depends on positive integers ``a, b, c``. Its white regions
are ``alpha_1 .. alpha_{3a+6}`` plus the unbounded region. The generator is
matrix-first: it writes down the reduced Goeritz matrix block by block, adds
the unbounded region as the vertex that makes every row sum vanish, and turns
each entry into parallel edges.

Vertex 0 is the unbounded region and vertex ``k`` is ``alpha_k``. The three
designated crossings ``c_1, c_2, c_3`` are the single edges joining
``alpha_1, alpha_2, alpha_3`` to the unbounded region. Deleting ``c_i`` is the
``0`` resolution (the diagonal entry of row ``i`` goes up by one) and
contracting it is the ``inf`` resolution (row and column ``i`` disappear).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import BadParameter, InternalMismatch, UnknownFormula, Unsupported
from .poly import PolyZ
from .tait_graph import (
    ResolutionOutcome,
    SignedTaitGraph,
    contract_edge,
    contraction_map,
    delete_edge,
    goeritz_reduced,
)

STAR, ZERO, INF = "*", "0", "inf"
EPS_SYMBOLS = (STAR, ZERO, INF)


def _check_positive(**params):
    for name, val in params.items():
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise BadParameter(f"{name} must be a positive integer, got {val!r}")


def _corner_block(b, c) -> List[list]:
    """The 9x9 Goeritz matrix of the family at a = 1, entries in b and c."""
    one, zero = b - b + 1, b - b
    G = [[zero] * 9 for _ in range(9)]

    def put_scalar_block(bi, bj, val):
        for k in range(3):
            G[3 * bi + k][3 * bj + k] = val

    put_scalar_block(0, 0, -one)
    put_scalar_block(0, 1, -one)
    put_scalar_block(1, 0, -one)
    put_scalar_block(0, 2, one)
    put_scalar_block(2, 0, one)
    put_scalar_block(1, 1, b + 1)
    # the b-twist coupling is a cyclic shift between the middle and bottom rows
    for r, col in ((3, 7), (4, 8), (5, 6)):
        G[r][col] = -b
        G[col][r] = -b
    for i in range(6, 9):
        for j in range(6, 9):
            G[i][j] = b + 2 * c + 1 if i == j else -c - 1
    return G


def family_matrix(a: int, b, c) -> List[list]:
    """Reduced Goeritz matrix of the family link, of size 3a + 6.

    ``b`` and ``c`` may be ints or :class:`PolyZ` values. For ``a > 1`` the
    rows of ``alpha_1 .. alpha_{3a-3}`` form a chain of ``-2I`` blocks coupled
    by ``I`` that feeds into the a = 1 corner block.
    """
    if not isinstance(a, int) or a < 1:
        raise BadParameter(f"a must be a positive integer, got {a!r}")
    one, zero = b - b + 1, b - b
    n = 3 * a + 6
    G = [[zero] * n for _ in range(n)]
    off = 3 * (a - 1)
    for k in range(a - 1):
        for t in range(3):
            i = 3 * k + t
            G[i][i] = -2 * one
            G[i][i + 3] = one
            G[i + 3][i] = one
    corner = _corner_block(b, c)
    for i in range(9):
        for j in range(9):
            G[off + i][off + j] = corner[i][j]
    return G


def _graph_from_reduced_matrix(M: Sequence[Sequence[int]]) -> SignedTaitGraph:
    """Materialize the graph whose Goeritz matrix, with vertex 0 dropped, is M."""
    n = len(M)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = M[i][j]
            edges += [(i + 1, j + 1, 1 if m > 0 else -1)] * abs(m)
        w = -sum(M[i])
        edges += [(0, i + 1, 1 if w > 0 else -1)] * abs(w)
    g = SignedTaitGraph(n + 1, 0, tuple(edges))
    if goeritz_reduced(g) != [list(r) for r in M]:
        raise InternalMismatch("generated graph does not reproduce its Goeritz matrix")
    return g


def paper_family(a: int, b: int, c: int) -> Tuple[SignedTaitGraph, Tuple[int, int, int]]:
    """Tait graph of the family link and the edge ids of c_1, c_2, c_3."""
    _check_positive(a=a, b=b, c=c)
    g = _graph_from_reduced_matrix(family_matrix(a, b, c))
    designated = tuple(g.edge_id(0, i, 1) for i in (1, 2, 3))
    for i in (1, 2, 3):
        if sum(1 for e in g.edges if e[:2] == (0, i)) != 1:
            raise InternalMismatch(f"alpha_{i} should meet the outer region in one crossing")
    return g, designated


def pretzel_graph(*twists: int) -> SignedTaitGraph:
    """Tait graph of the standard diagram of the pretzel link P(p_1, ..., p_n).

    The white regions are the n gaps between consecutive twist bands, the
    gap outside band n and band 1 being the unbounded one (vertex 0). Band i
    contributes |p_i| parallel edges between gaps i - 1 and i, each of sign
    -sign(p_i). The determinant is |sum_i prod_{j != i} p_j|.
    """
    if len(twists) == 1 and isinstance(twists[0], (list, tuple)):
        twists = tuple(twists[0])
    if len(twists) < 2:
        raise BadParameter("a pretzel link needs at least two twist bands")
    if any(not isinstance(p, int) or p == 0 for p in twists):
        raise BadParameter("twist counts must be nonzero integers")
    n = len(twists)
    edges = []
    for i, p in enumerate(twists):
        s = -1 if p > 0 else 1
        edges += [((i - 1) % n, i, s)] * abs(p)
    return SignedTaitGraph(n, 0, tuple(edges))


def pretzel_graph_dual(*twists: int) -> SignedTaitGraph:
    """The other Tait graph of the same pretzel diagram.

    Vertices are the regions above and below the bands (0 and 1) and the
    |p_i| - 1 bigons inside each band, so band i is a path of |p_i| edges
    from top to bottom. Signs are opposite to :func:`pretzel_graph`.
    """
    if len(twists) == 1 and isinstance(twists[0], (list, tuple)):
        twists = tuple(twists[0])
    if len(twists) < 2 or any(not isinstance(p, int) or p == 0 for p in twists):
        raise BadParameter("need at least two nonzero twist counts")
    edges = []
    nxt = 2
    for p in twists:
        s = 1 if p > 0 else -1
        path = [0] + list(range(nxt, nxt + abs(p) - 1)) + [1]
        nxt += abs(p) - 1
        edges += [(x, y, s) for x, y in zip(path, path[1:])]
    return SignedTaitGraph(nxt, 0, tuple(edges))


@dataclass(frozen=True)
class ResolutionSpec:
    """Selects the member L(a: eps_1, eps_2, eps_3) of the family."""

    a: int
    b: int
    c: int
    eps: Tuple[str, str, str] = (STAR, STAR, STAR)

    def __post_init__(self):
        _check_positive(a=self.a, b=self.b, c=self.c)
        eps = tuple(_normalize_eps(e) for e in self.eps)
        if len(eps) != 3:
            raise BadParameter("a resolution spec needs exactly three symbols")
        object.__setattr__(self, "eps", eps)

    def with_eps(self, eps) -> "ResolutionSpec":
        return ResolutionSpec(self.a, self.b, self.c, tuple(eps))

    def with_a(self, a: int) -> "ResolutionSpec":
        return ResolutionSpec(a, self.b, self.c, self.eps)

    def __str__(self):
        return f"L(a={self.a},b={self.b},c={self.c}:{','.join(self.eps)})"

    @property
    def label(self) -> str:
        return f"L({self.a}:{','.join(self.eps)})"


def _normalize_eps(e) -> str:
    s = str(e).strip().lower()
    if s in ("*",):
        return STAR
    if s in ("0",):
        return ZERO
    if s in ("inf", "infty", "infinity", "oo", "∞"):
        return INF
    raise BadParameter(f"resolution symbol must be one of *, 0, inf; got {e!r}")


_SPEC_RE = re.compile(r"^\s*L\s*\((?P<params>[^:]*):(?P<eps>[^)]*)\)\s*$")


def parse_spec(text: str) -> ResolutionSpec:
    """Parse ``L(a=3,b=2,c=1:0,inf,*)``.

    Parameters are ``key=value`` pairs (any order, all three required);
    symbols after the colon are ``*``, ``0`` or ``inf`` (``oo`` and ``∞`` are
    accepted too). The colon part may be omitted, meaning ``*,*,*``.
    """
    t = text.strip()
    if ":" not in t and t.endswith(")"):
        t = t[:-1] + ":*,*,*)"
    m = _SPEC_RE.match(t)
    if not m:
        raise BadParameter(f"malformed family spec {text!r}")
    params = {}
    for item in m.group("params").split(","):
        if not item.strip():
            continue
        if "=" not in item:
            raise BadParameter(f"expected key=value in {text!r}")
        k, v = (x.strip() for x in item.split("=", 1))
        if k not in ("a", "b", "c") or k in params:
            raise BadParameter(f"bad or repeated parameter {k!r}")
        try:
            params[k] = int(v)
        except ValueError:
            raise BadParameter(f"parameter {k} must be an integer, got {v!r}") from None
    if set(params) != {"a", "b", "c"}:
        raise BadParameter("spec must give a, b and c")
    eps = [x.strip() for x in m.group("eps").split(",")]
    if len(eps) != 3:
        raise BadParameter("spec must give three resolution symbols")
    return ResolutionSpec(params["a"], params["b"], params["c"], tuple(eps))


def resolve_tracked(spec: ResolutionSpec) -> Tuple[ResolutionOutcome, Dict[int, int]]:
    """Resolve and report where the still-unresolved c_i edges ended up."""
    g, designated = paper_family(spec.a, spec.b, spec.c)
    # track c_i by the vertex alpha_i; each meets the outer vertex exactly once
    where = {i: i for i in (1, 2, 3)}
    outcome = ResolutionOutcome(g)
    for i, e in zip((1, 2, 3), spec.eps):
        if e == STAR:
            continue
        g = outcome.graph
        eid = g.edge_id(g.outer, where[i], 1)
        if e == ZERO:
            outcome = delete_edge(g, eid)
        else:
            u, v, _ = g.edge(eid)
            m = contraction_map(g.vertex_count, u, v)
            outcome = contract_edge(g, eid)
            where = {k: m[x] for k, x in where.items()}
        del where[i]
        if outcome.is_split:
            return outcome, {}
    g = outcome.graph
    return outcome, {i: g.edge_id(g.outer, x, 1) for i, x in where.items()}


def resolve_family(spec: ResolutionSpec) -> ResolutionOutcome:
    return resolve_tracked(spec)[0]


def symbolic_goeritz(eps=(STAR, STAR, STAR), a: int = 1) -> List[List[PolyZ]]:
    """The 9x9 matrix over Z[b, c] of L(1: eps) with the resolution edits applied.

    A ``0`` adds one to diagonal entry i (removing the +1 edge to the outer
    region), an ``inf`` drops row and column i.
    """
    if a != 1:
        raise Unsupported("symbolic matrices are only built for a = 1")
    eps = tuple(_normalize_eps(e) for e in eps)
    b, c = PolyZ.var("b"), PolyZ.var("c")
    G = family_matrix(1, b, c)
    for i, e in enumerate(eps):
        if e == ZERO:
            G[i][i] = G[i][i] + 1
    keep = [i for i in range(9) if i >= 3 or eps[i] != INF]
    return [[G[i][j] for j in keep] for i in keep]


def _S(a, b, c):
    return 3 * a * b + 3 * b * c + 3 * c * a + 3 * a + 3 * b + 3 * c + 2


def _T(a, b, c):
    return 3 * a * b + 3 * b * c + 3 * c * a + 3 * a


@dataclass(frozen=True)
class ClosedForm:
    name: str
    eps: Tuple[str, str, str]
    source: str
    text: str
    fn: Callable
    a_fixed: Optional[int] = None

    def __call__(self, a, b, c):
        if self.a_fixed is not None and a != self.a_fixed:
            raise BadParameter(f"{self.name} only holds at a = {self.a_fixed}")
        return self.fn(a, b, c)


def _eps(s: str) -> Tuple[str, str, str]:
    return tuple(_normalize_eps(x) for x in s.split(","))


_CATALOG = [
    # a = 1 only
    ClosedForm("a1:L(*,*,*)", _eps("*,*,*"), "a1", "(3bc+6b+6c+5)^2",
               lambda a, b, c: (3 * b * c + 6 * b + 6 * c + 5) ** 2, 1),
    ClosedForm("a1:L(0,*,*)", _eps("0,*,*"), "a1", "2(b+c+1)(3bc+6b+6c+5)",
               lambda a, b, c: 2 * (b + c + 1) * (3 * b * c + 6 * b + 6 * c + 5), 1),
    ClosedForm("a1:L(inf,*,*)", _eps("inf,*,*"), "a1", "(3bc+4b+4c+3)(3bc+6b+6c+5)",
               lambda a, b, c: (3 * b * c + 4 * b + 4 * c + 3) * (3 * b * c + 6 * b + 6 * c + 5), 1),
    ClosedForm("a1:L(0,0,*)", _eps("0,0,*"), "a1", "3(b+c+1)^2",
               lambda a, b, c: 3 * (b + c + 1) ** 2, 1),
    ClosedForm("a1:L(0,inf,*)", _eps("0,inf,*"), "a1", "(b+c+1)(6bc+9b+9c+7)",
               lambda a, b, c: (b + c + 1) * (6 * b * c + 9 * b + 9 * c + 7), 1),
    ClosedForm("a1:L(inf,0,*)", _eps("inf,0,*"), "a1", "(b+c+1)(6bc+9b+9c+7)",
               lambda a, b, c: (b + c + 1) * (6 * b * c + 9 * b + 9 * c + 7), 1),
    ClosedForm("a1:L(inf,inf,*)", _eps("inf,inf,*"), "a1", "(3bc+3b+3c+2)(3bc+5b+5c+4)",
               lambda a, b, c: (3 * b * c + 3 * b + 3 * c + 2) * (3 * b * c + 5 * b + 5 * c + 4), 1),
    ClosedForm("a1:L(0,inf,0)", _eps("0,inf,0"), "a1", "3(b+c+1)^2",
               lambda a, b, c: 3 * (b + c + 1) ** 2, 1),
    ClosedForm("a1:L(0,inf,inf)", _eps("0,inf,inf"), "a1", "2(b+c+1)(3bc+3b+3c+2)",
               lambda a, b, c: 2 * (b + c + 1) * (3 * b * c + 3 * b + 3 * c + 2), 1),
    ClosedForm("a1:L(inf,inf,inf)", _eps("inf,inf,inf"), "a1", "(3bc+3b+3c+2)^2",
               lambda a, b, c: (3 * b * c + 3 * b + 3 * c + 2) ** 2, 1),
    # general a
    ClosedForm("family:L(*,*,*)", _eps("*,*,*"), "family", "(3ab+3bc+3ca+3a+3b+3c+2)^2",
               lambda a, b, c: _S(a, b, c) ** 2),
    ClosedForm("family:L(0,*,*)", _eps("0,*,*"), "family", "2(b+c+1)(3ab+3bc+3ca+3a+3b+3c+2)",
               lambda a, b, c: 2 * (b + c + 1) * _S(a, b, c)),
    ClosedForm("family:L(inf,*,*)", _eps("inf,*,*"), "family",
               "(3ab+3bc+3ca+3a+b+c)(3ab+3bc+3ca+3a+3b+3c+2)",
               lambda a, b, c: (_T(a, b, c) + b + c) * _S(a, b, c)),
    ClosedForm("nested:L(0,0,*)", _eps("0,0,*"), "nested", "3(b+c+1)^2",
               lambda a, b, c: 3 * (b + c + 1) ** 2),
    ClosedForm("nested:L(0,inf,*)", _eps("0,inf,*"), "nested",
               "(b+c+1)(6ab+6bc+6ca+6a+3b+3c+1)",
               lambda a, b, c: (b + c + 1) * (2 * _T(a, b, c) + 3 * b + 3 * c + 1)),
    ClosedForm("nested:L(inf,inf,*)", _eps("inf,inf,*"), "nested",
               "(3ab+3bc+3ca+3a+2b+2c+1)(3ab+3bc+3ca+3a-1)",
               lambda a, b, c: (_T(a, b, c) + 2 * b + 2 * c + 1) * (_T(a, b, c) - 1)),
]

FORMULAS: Dict[str, ClosedForm] = {f.name: f for f in _CATALOG}


def closed_form(name: str, a: int, b: int, c: int) -> int:
    try:
        f = FORMULAS[name]
    except KeyError:
        raise UnknownFormula(name) from None
    _check_positive(a=a, b=b, c=c)
    return f(a, b, c)


def symbolic_closed_form(name: str) -> PolyZ:
    """A table-1 closed form as a polynomial in b and c."""
    f = FORMULAS.get(name)
    if f is None:
        raise UnknownFormula(name)
    if f.a_fixed != 1:
        raise Unsupported("only a = 1 formulas are polynomials in b and c alone")
    return f(1, PolyZ.var("b"), PolyZ.var("c"))


def formulas_for(source: str) -> List[ClosedForm]:
    return [f for f in _CATALOG if f.source == source]
