"""Exact determinants and normal forms.

Matrices are plain lists of rows. Entries are Python ints (``IntMatrix``)
or :class:`~qaknots.poly.PolyZ` (``PolyMatrix``); nothing here ever touches
floating point.
"""

from __future__ import annotations

import itertools
import math
from typing import List, Sequence

from .errors import ExactDivisionFailure, TooLarge
from .poly import PolyZ

IntMatrix = List[List[int]]
PolyMatrix = List[List[PolyZ]]


def _check_square(M: Sequence[Sequence]) -> int:
    n = len(M)
    for row in M:
        if len(row) != n:
            raise ValueError("matrix is not square")
    return n


def _bareiss(M, zero, one, exact_div):
    n = _check_square(M)
    if n == 0:
        return one
    A = [list(row) for row in M]
    sign = 1
    prev = one
    for k in range(n - 1):
        # first nonzero pivot in column order keeps the result reproducible
        p = next((r for r in range(k, n) if A[r][k] != zero), None)
        if p is None:
            return zero
        if p != k:
            A[k], A[p] = A[p], A[k]
            sign = -sign
        pivot = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(pivot * row_i[j] - aik * row_k[j], prev)
            row_i[k] = zero
        prev = pivot
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def _int_exact_div(x: int, d: int) -> int:
    q, r = divmod(x, d)
    if r:
        raise ExactDivisionFailure(f"{x} is not divisible by {d}")
    return q


def det_bareiss(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination.

    The empty matrix has determinant 1.
    """
    return _bareiss(M, 0, 1, _int_exact_div)


def poly_det(M: Sequence[Sequence]) -> PolyZ:
    """Determinant of a square matrix over Z[b, c]."""
    P = [[PolyZ.coerce(x) for x in row] for row in M]
    return _bareiss(P, PolyZ(), PolyZ(1), lambda x, d: x.exact_div(d))


def det_cofactor(M: Sequence[Sequence[int]]) -> int:
    """Laplace expansion along the first row. Exponential; only for checking."""
    n = _check_square(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j, a in enumerate(M[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * a * det_cofactor(minor)
    return total


def smith_normal_form(M: Sequence[Sequence[int]]) -> List[int]:
    """Invariant factors d1 | d2 | ... | dn of a square integer matrix.

    Zero factors (from a rank deficit) come last.
    """
    n = _check_square(M)
    A = [list(map(int, row)) for row in M]
    for t in range(n):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, n) for j in range(t, n) if A[i][j]]
            if not entries:
                return _finish_snf(A, n)
            _, pi, pj = min(entries)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            p = A[t][t]
            clean = True
            for i in range(t + 1, n):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
    return _finish_snf(A, n)


def _finish_snf(A, n):
    diag = [abs(A[i][i]) for i in range(n)]
    nonzero = [d for d in diag if d]
    # re-impose the divisibility chain; the elimination above already gives
    # it, but normalising keeps the output canonical
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            g = math.gcd(nonzero[i], nonzero[j])
            nonzero[i], nonzero[j] = g, nonzero[i] * nonzero[j] // g
    return nonzero + [0] * (n - len(nonzero))


def signed_tree_sum(g, max_edges: int = 20) -> int:
    """Sum over spanning trees of the product of edge signs.

    Brute-force enumeration of edge subsets, kept independent of any
    determinant code so it can serve as an oracle for it.
    """
    edges = [(u, v, s) for u, v, s in g.edges if u != v]
    if len(edges) > max_edges:
        raise TooLarge(f"{len(edges)} edges exceeds the enumeration limit {max_edges}")
    n = g.vertex_count
    total = 0
    for subset in itertools.combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        prod = 1
        for u, v, s in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
            prod *= s
        else:
            total += prod
    return total


def read_matrix(text: str):
    """Parse the matrix text format: a size line, then ``n`` rows.

    Entries are integers or polynomial strings in b and c. Returns an
    ``IntMatrix`` when every entry is a plain integer, else a ``PolyMatrix``.
    """
    from .poly import parse_poly

    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix text")
    n = int(lines[0].strip())
    rows = lines[1:]
    if len(rows) != n:
        raise ValueError(f"expected {n} rows, found {len(rows)}")
    out = []
    symbolic = False
    for ln in rows:
        cells = ln.split()
        if len(cells) != n:
            raise ValueError(f"expected {n} entries per row, found {len(cells)}")
        row = []
        for cell in cells:
            try:
                row.append(int(cell))
            except ValueError:
                row.append(parse_poly(cell))
                symbolic = True
        out.append(row)
    if symbolic:
        out = [[PolyZ.coerce(x) for x in row] for row in out]
    return out


def format_matrix(M) -> str:
    lines = [str(len(M))]
    lines += [" ".join(str(x) for x in row) for row in M]
    return "\n".join(lines) + "\n"
