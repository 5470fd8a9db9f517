"""Polynomial expressions with exact rational coefficients.

Grammar: integers and ``p/q`` rationals, the variables ``x`` and ``y``,
``+ - *``, ``^`` (or ``**``) with a non-negative integer exponent, parentheses
and implicit multiplication (``2x``, ``x(x+1)``).  Division is only allowed by
a constant.  Decimal literals are rejected so every input is exact.
"""
from __future__ import annotations

import re
from fractions import Fraction

from vroots.poly import Poly


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\.\d+|\d+)|(\*\*|[-+*/^()])|([A-Za-z_]\w*))")


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at {pos}")
        num, op, name = m.groups()
        if num is not None:
            if "." in num:
                raise ParseError(f"decimal literal {num!r}: write it as a fraction")
            out.append(("num", int(num)))
        elif op is not None:
            out.append(("op", "^" if op == "**" else op))
        else:
            out.append(("var", name))
        pos = m.end()
    return out


# A polynomial is a dict {(ex, ey): Fraction} without zero entries.

def _add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        c = out.get(k, 0) + sign * v
        if c:
            out[k] = c
        else:
            out.pop(k, None)
    return out


def _mul(a: dict, b: dict) -> dict:
    out = {}
    for (i, j), u in a.items():
        for (k, l), v in b.items():
            key = (i + k, j + l)
            c = out.get(key, 0) + u * v
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def _const(a: dict):
    if not a:
        return Fraction(0)
    if set(a) == {(0, 0)}:
        return a[(0, 0)]
    return None


class _Parser:
    def __init__(self, text: str, variables):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = variables
        if not self.tokens:
            raise ParseError("empty expression")

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, op):
        if self.take() != ("op", op):
            raise ParseError(f"expected {op!r}")

    def parse(self) -> dict:
        out = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"unexpected token {self.peek()[1]!r}")
        return out

    def expr(self) -> dict:
        out = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = 1 if self.take()[1] == "+" else -1
            out = _add(out, self.term(), sign)
        return out

    def term(self) -> dict:
        out = self.unary()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                out = _mul(out, self.unary())
            elif (kind, val) == ("op", "/"):
                self.take()
                den = _const(self.unary())
                if den is None:
                    raise ParseError("division is only allowed by a constant")
                if den == 0:
                    raise ParseError("division by zero")
                out = {k: v / den for k, v in out.items()}
            elif kind in ("num", "var") or (kind, val) == ("op", "("):
                out = _mul(out, self.power())
            else:
                return out

    def unary(self) -> dict:
        if self.peek() == ("op", "-"):
            self.take()
            return {k: -v for k, v in self.unary().items()}
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> dict:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer literal")
            out = {(0, 0): Fraction(1)}
            for _ in range(val):
                out = _mul(out, base)
            return out
        return base

    def atom(self) -> dict:
        kind, val = self.take()
        if kind == "num":
            return {(0, 0): Fraction(val)} if val else {}
        if kind == "var":
            if val not in self.variables:
                raise ParseError(f"unknown variable {val!r}")
            return {(1, 0) if val == "x" else (0, 1): Fraction(1)}
        if (kind, val) == ("op", "("):
            out = self.expr()
            self.expect(")")
            return out
        raise ParseError("unexpected end of expression" if kind is None else f"unexpected token {val!r}")


def parse_poly(text: str) -> Poly:
    """Univariate polynomial in ``x``."""
    terms = _Parser(text, ("x",)).parse()
    if not terms:
        return Poly((0,))
    coeffs = [Fraction(0)] * (max(i for i, _ in terms) + 1)
    for (i, _), v in terms.items():
        coeffs[i] = v
    return Poly(coeffs)


class BiPoly:
    """Polynomial in ``x`` and ``y`` read as a polynomial in ``y`` with coefficients in ``x``."""

    def __init__(self, terms: dict):
        self.terms = dict(terms)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self.terms), default=0)

    def is_y_monic(self) -> bool:
        d = self.y_degree
        return d >= 1 and {k: v for k, v in self.terms.items() if k[1] == d} == {(0, d): 1}

    def slice_at(self, x0) -> Poly:
        """The polynomial in ``y`` obtained by setting ``x = x0``."""
        x0 = Fraction(x0)
        coeffs = [Fraction(0)] * (self.y_degree + 1)
        for (i, j), v in self.terms.items():
            coeffs[j] += v * x0 ** i
        return Poly(coeffs)


def parse_bivariate(text: str) -> BiPoly:
    return BiPoly(_Parser(text, ("x", "y")).parse())
