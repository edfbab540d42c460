"""Sparse polynomials over the integers in the two variables ``b`` and ``c``.

A polynomial is stored as a dict mapping exponent pairs ``(i, j)`` (meaning
``b**i * c**j``) to nonzero Python ints. Monomials are ordered graded
lexicographically with ``b < c``, so ``c`` outranks ``b`` at equal degree.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Tuple, Union

from .errors import ExactDivisionFailure

Monomial = Tuple[int, int]
VARIABLES = ("b", "c")


def _order_key(m: Monomial):
    i, j = m
    return (i + j, j, i)


class PolyZ:
    """Immutable element of Z[b, c]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Dict[Monomial, int], int, None] = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {(0, 0): terms} if terms else {}
        self._terms = {m: int(v) for m, v in terms.items() if v}
        self._hash = None

    @classmethod
    def var(cls, name: str) -> "PolyZ":
        if name == "b":
            return cls({(1, 0): 1})
        if name == "c":
            return cls({(0, 1): 1})
        raise ValueError(f"unknown variable {name!r}; only b and c exist")

    @classmethod
    def coerce(cls, x) -> "PolyZ":
        if isinstance(x, PolyZ):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot convert {type(x).__name__} to PolyZ")

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def monomials(self) -> list:
        """Monomials in decreasing graded-lex order."""
        return sorted(self._terms, key=_order_key, reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def leading_term(self) -> Tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=_order_key)
        return m, self._terms[m]

    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def __add__(self, other):
        try:
            other = PolyZ.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, v in other._terms.items():
            out[m] = out.get(m, 0) + v
        return PolyZ(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyZ({m: -v for m, v in self._terms.items()})

    def __sub__(self, other):
        try:
            other = PolyZ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return PolyZ.coerce(other) - self

    def __mul__(self, other):
        try:
            other = PolyZ.coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for (i1, j1), v1 in self._terms.items():
            for (i2, j2), v2 in other._terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, 0) + v1 * v2
        return PolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = PolyZ(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other) -> "PolyZ":
        """Quotient of an exact division; raises if a remainder is left."""
        other = PolyZ.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        (lb, lc), lv = other.leading_term()
        rem = dict(self._terms)
        quot: Dict[Monomial, int] = {}
        while rem:
            m = max(rem, key=_order_key)
            v = rem[m]
            qi, qj = m[0] - lb, m[1] - lc
            if qi < 0 or qj < 0 or v % lv:
                raise ExactDivisionFailure(f"{self} is not divisible by {other}")
            q = v // lv
            quot[(qi, qj)] = q
            for (i, j), w in other._terms.items():
                key = (i + qi, j + qj)
                nv = rem.get(key, 0) - q * w
                if nv:
                    rem[key] = nv
                else:
                    rem.pop(key, None)
        return PolyZ(quot)

    def __floordiv__(self, other):
        return self.exact_div(other)

    def evaluate(self, b: int, c: int) -> int:
        return sum(v * b**i * c**j for (i, j), v in self._terms.items())

    __call__ = evaluate

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyZ(other)
        if not isinstance(other, PolyZ):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m in self.monomials():
            v = self._terms[m]
            factors = []
            for name, e in zip(VARIABLES, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(v)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if v > 0 else "-" + body)
            else:
                parts.append(("+" if v > 0 else "-") + body)
        return "".join(parts)

    def __repr__(self):
        return f"PolyZ({str(self)!r})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([bc])|(\*\*|[-+*^()]))")


def parse_poly(text: str) -> PolyZ:
    """Parse strings such as ``3*b*c+6*b+6*c+5`` or ``(b+c+1)^2``.

    Accepts integer literals, the variables ``b`` and ``c``, binary ``+ - *``,
    unary minus, ``^`` (or ``**``) with a nonnegative integer exponent, and
    parentheses.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("var", var))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if not tokens:
        raise ValueError("empty polynomial string")

    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else None

    def take():
        nonlocal i
        i += 1
        return tokens[i - 1]

    def expr():
        node = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term():
        node = unary()
        while peek() == ("op", "*"):
            take()
            node = node * unary()
        return node

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            tok = take() if peek() else None
            if tok is None or tok[0] != "num":
                raise ValueError("exponent must be a nonnegative integer literal")
            return base ** tok[1]
        return base

    def atom():
        tok = take() if peek() else None
        if tok is None:
            raise ValueError("unexpected end of polynomial string")
        kind, val = tok
        if kind == "num":
            return PolyZ(val)
        if kind == "var":
            return PolyZ.var(val)
        if val == "(":
            node = expr()
            if peek() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            take()
            return node
        raise ValueError(f"unexpected token {val!r}")

    result = expr()
    if i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result


def poly_add(p, q) -> PolyZ:
    return PolyZ.coerce(p) + q


def poly_mul(p, q) -> PolyZ:
    return PolyZ.coerce(p) * q


def poly_exact_div(p, q) -> PolyZ:
    return PolyZ.coerce(p).exact_div(q)


def poly_sum(items: Iterable) -> PolyZ:
    total = PolyZ()
    for x in items:
        total = total + x
    return total
