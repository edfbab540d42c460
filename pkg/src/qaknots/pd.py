"""Planar-diagram codes to signed Tait graphs.

A PD code lists crossings as ``X(a,b,c,d)``: the four arc labels met going
counterclockwise around the crossing, starting from the incoming
under-strand. So ``a``-``c`` is the under-strand and ``b``-``d`` the
over-strand. Every arc label occurs exactly twice. For the trefoil::

    X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)

Corner ``i`` of a crossing is the wedge between slots ``i`` and ``i + 1``
(mod 4). Opposite corners (0 and 2, or 1 and 3) always carry the same
checkerboard colour.

Crossing signs for the Goeritz matrix follow one fixed rule: rotating the
over-strand counterclockwise sweeps corners 1 and 3. A crossing joining two
white regions through corners 1 and 3 gets sign +1; through corners 0 and 2
it gets -1. An alternating diagram therefore gives a graph with a single
sign. Only |det| is ever read off, so the global choice does not matter.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import LabelCount, NonPlanar, PDSyntaxError
from .tait_graph import SignedTaitGraph

Corner = Tuple[int, int]

_CROSSING = re.compile(r"X\s*[\[(]([^\])]*)[\])]")
_SEPARATORS = re.compile(r"^[\s,;\[\]]*$")


@dataclass(frozen=True)
class PDDiagram:
    crossings: Tuple[Tuple[int, int, int, int], ...]

    def __post_init__(self):
        if not self.crossings:
            raise PDSyntaxError("a PD code needs at least one crossing")
        counts = Counter(x for cr in self.crossings for x in cr)
        bad = sorted(k for k, v in counts.items() if v != 2)
        if bad:
            raise LabelCount(f"labels not used exactly twice: {bad}")
        if any(x < 1 for x in counts):
            raise PDSyntaxError("arc labels must be positive integers")

    def __str__(self):
        return " ".join("X(%d,%d,%d,%d)" % cr for cr in self.crossings)

    def occurrences(self) -> Dict[int, List[Tuple[int, int]]]:
        occ: Dict[int, List[Tuple[int, int]]] = {}
        for k, cr in enumerate(self.crossings):
            for i, label in enumerate(cr):
                occ.setdefault(label, []).append((k, i))
        return occ


def parse_pd(text: str) -> PDDiagram:
    """Parse a list of ``X(a,b,c,d)`` terms (square brackets also accepted)."""
    crossings = []
    last = 0
    for m in _CROSSING.finditer(text):
        if not _SEPARATORS.match(text[last:m.start()]):
            raise PDSyntaxError(f"unexpected text {text[last:m.start()].strip()!r}")
        last = m.end()
        parts = [p.strip() for p in m.group(1).split(",")]
        if len(parts) != 4:
            raise PDSyntaxError(f"crossing {m.group(0)!r} must have four labels")
        try:
            crossings.append(tuple(int(p) for p in parts))
        except ValueError:
            raise PDSyntaxError(f"non-integer label in {m.group(0)!r}") from None
    if not _SEPARATORS.match(text[last:]):
        raise PDSyntaxError(f"unexpected text {text[last:].strip()!r}")
    return PDDiagram(tuple(crossings))


def _next_corner(pd: PDDiagram, occ, corner: Corner) -> Corner:
    k, i = corner
    label = pd.crossings[k][(i + 1) % 4]
    a, b = occ[label]
    k2, j = b if a == (k, (i + 1) % 4) else a
    return (k2, j)


def faces(pd: PDDiagram) -> List[List[Corner]]:
    """Complementary regions as cycles of corners ``(crossing, corner index)``.

    The face to the right of an arc leaving corner ``(k, i)`` through slot
    ``i + 1`` continues at the far end of that arc, in the corner that
    follows the arc's slot counterclockwise.
    """
    occ = pd.occurrences()
    seen = set()
    out = []
    for k in range(len(pd.crossings)):
        for i in range(4):
            if (k, i) in seen:
                continue
            cycle = []
            cur = (k, i)
            while cur not in seen:
                seen.add(cur)
                cycle.append(cur)
                cur = _next_corner(pd, occ, cur)
            if cur != (k, i):
                raise NonPlanar("face traversal did not close")
            out.append(cycle)
    n = len(pd.crossings)
    if n - 2 * n + len(out) != 2:
        raise NonPlanar(f"{len(out)} faces for {n} crossings breaks V - E + F = 2")
    return out


def face_colors(pd: PDDiagram, face_list=None) -> List[int]:
    """Checkerboard 2-colouring of the faces; face 0 gets colour 0."""
    face_list = face_list if face_list is not None else faces(pd)
    where = {c: f for f, cyc in enumerate(face_list) for c in cyc}
    # the two corners flanking a slot lie on opposite sides of its arc
    adj: Dict[int, set] = {f: set() for f in range(len(face_list))}
    for k in range(len(pd.crossings)):
        for i in range(4):
            f1, f2 = where[(k, i)], where[(k, (i + 1) % 4)]
            adj[f1].add(f2)
            adj[f2].add(f1)
    color = [-1] * len(face_list)
    color[0] = 0
    stack = [0]
    while stack:
        f = stack.pop()
        for h in adj[f]:
            if color[h] < 0:
                color[h] = 1 - color[f]
                stack.append(h)
            elif color[h] == color[f]:
                raise NonPlanar("faces do not admit a checkerboard colouring")
    if min(color) < 0:
        raise NonPlanar("diagram is not connected")
    return color


def to_tait(pd: PDDiagram, color_choice: str = "A") -> SignedTaitGraph:
    """Tait graph on one checkerboard class.

    ``"A"`` takes the class of corner 0 of the first crossing as white,
    ``"B"`` the other class. The unbounded region is taken to be the white
    face beside the arc with the largest label.
    """
    choice = color_choice.upper()
    if choice not in ("A", "B"):
        raise ValueError("color_choice must be 'A' or 'B'")
    face_list = faces(pd)
    colors = face_colors(pd, face_list)
    where = {c: f for f, cyc in enumerate(face_list) for c in cyc}
    white = colors[where[(0, 0)]] if choice == "A" else 1 - colors[where[(0, 0)]]
    white_faces = [f for f in range(len(face_list)) if colors[f] == white]
    index = {f: i for i, f in enumerate(white_faces)}

    edges = []
    for k in range(len(pd.crossings)):
        if colors[where[(k, 0)]] == white:
            u, v, s = where[(k, 0)], where[(k, 2)], -1
        else:
            u, v, s = where[(k, 1)], where[(k, 3)], 1
        edges.append((index[u], index[v], s))

    top = max(x for cr in pd.crossings for x in cr)
    k, i = pd.occurrences()[top][0]
    beside = [where[(k, i)], where[(k, (i - 1) % 4)]]
    outer = next(index[f] for f in beside if colors[f] == white)
    return SignedTaitGraph(len(white_faces), outer, tuple(edges))


def braid_closure_pd(word: List[int], strands: int) -> PDDiagram:
    """PD code of the closure of a braid word.

    Generator ``i`` (1-based) crosses strands ``i`` and ``i + 1``; its sign
    picks which strand passes under. Words using every generator with sign
    ``(-1)**i`` close up to alternating diagrams.
    """
    if strands < 1 or any(g == 0 or abs(g) >= strands for g in word):
        raise ValueError("braid generators must lie in 1 .. strands - 1")
    fresh = iter(range(1, 10 ** 9))
    start = [next(fresh) for _ in range(strands)]
    current = list(start)
    raw = []
    for g in word:
        i = abs(g) - 1
        bl, br = current[i], current[i + 1]
        tl, tr = next(fresh), next(fresh)
        # strands run bottom to top; bl continues to tr and br to tl
        if g > 0:
            raw.append((bl, br, tr, tl))
        else:
            raw.append((br, tr, tl, bl))
        current[i], current[i + 1] = tl, tr
    rename = {old: new for old, new in zip(current, start)}
    raw = [tuple(rename.get(x, x) for x in cr) for cr in raw]
    order = {}
    for cr in raw:
        for x in cr:
            order.setdefault(x, len(order) + 1)
    return PDDiagram(tuple(tuple(order[x] for x in cr) for cr in raw))
