"""A small expression language naming finite rings.

    expr := atom ('*' atom)*                  direct product, left-associative
    atom := primary ('[x]/(' poly ')')*       polynomial quotient
    primary := 'Z' nat | 'GF(' nat ')' | '0' | '(' expr ')'
    poly := signed sum of terms  c | c x | c x^k | x^k

``*`` is the product operator; ``x`` is reserved for the indeterminate.
Whitespace is ignored.  Examples: ``Z4``, ``Z2[x]/(x^2)``, ``0 * Z2[x]/(x^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ring import (
    FiniteRing,
    _poly_label,
    _prime_power,
    build_cyclic,
    build_gf,
    build_poly_quotient,
    direct_product,
    zero_ring,
)

__all__ = [
    "Cyclic",
    "GaloisField",
    "ParseError",
    "PolyQuotient",
    "Product",
    "RingExpr",
    "ZeroRing",
    "build_ring",
    "parse_ring_spec",
]


class ParseError(ValueError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}\n  {text}\n"
                         f"  {' ' * position}^")


class RingExpr:
    def build(self) -> FiniteRing:
        raise NotImplementedError


@dataclass(frozen=True)
class ZeroRing(RingExpr):
    def __str__(self):
        return "0"

    def build(self):
        return zero_ring()


@dataclass(frozen=True)
class Cyclic(RingExpr):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Z_n needs n >= 1")

    def __str__(self):
        return f"Z{self.n}"

    def build(self):
        return build_cyclic(self.n)


@dataclass(frozen=True)
class GaloisField(RingExpr):
    q: int

    def __post_init__(self):
        if _prime_power(self.q) is None:
            raise ValueError(f"GF({self.q}): {self.q} is not a prime power")

    def __str__(self):
        return f"GF({self.q})"

    def build(self):
        return build_gf(self.q)


@dataclass(frozen=True)
class PolyQuotient(RingExpr):
    base: RingExpr
    poly: tuple

    def __post_init__(self):
        if len(self.poly) < 2 or self.poly[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")

    def __str__(self):
        b = str(self.base)
        if isinstance(self.base, Product):
            b = f"({b})"
        return _poly_label(b, self.poly)

    def build(self):
        return build_poly_quotient(self.base.build(), self.poly, label=str(self))


@dataclass(frozen=True)
class Product(RingExpr):
    left: RingExpr
    right: RingExpr

    def __str__(self):
        r = str(self.right)
        if isinstance(self.right, Product):
            r = f"({r})"
        return f"{self.left} * {r}"

    def build(self):
        return direct_product(self.left.build(), self.right.build(),
                              label=str(self))


_TOKEN = re.compile(r"\s*(?:(\d+)|(GF|Z|x|[()\[\]/*^+-]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        start = m.start(1) if m.group(1) else m.start(2)
        if m.group(1):
            tokens.append(("nat", int(m.group(1)), start))
        else:
            tokens.append((m.group(2), None, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def pos(self):
        return self.toks[self.i][2]

    def fail(self, msg, pos=None):
        raise ParseError(msg, self.text, self.pos() if pos is None else pos)

    def take(self, kind):
        tok = self.toks[self.i]
        if tok[0] != kind:
            shown = "end of input" if tok[0] == "end" else repr(tok[0])
            self.fail(f"expected {kind!r}, found {shown}")
        self.i += 1
        return tok

    def expr(self):
        node = self.atom()
        while self.peek() == "*":
            self.i += 1
            node = Product(node, self.atom())
        return node

    def atom(self):
        node = self.primary()
        while self.peek() == "[":
            start = self.pos()
            for kind in ("[", "x", "]", "/", "("):
                self.take(kind)
            poly = self.poly(start)
            self.take(")")
            node = PolyQuotient(node, poly)
        return node

    def primary(self):
        kind, val, start = self.toks[self.i]
        if kind == "Z":
            self.i += 1
            n = self.take("nat")
            if n[1] < 1:
                self.fail("Z0 is not a ring here; write 0 for the zero ring",
                          start)
            return Cyclic(n[1])
        if kind == "GF":
            self.i += 1
            self.take("(")
            q = self.take("nat")
            self.take(")")
            if _prime_power(q[1]) is None:
                self.fail(f"GF({q[1]}): not a prime power", q[2])
            return GaloisField(q[1])
        if kind == "nat":
            if val != 0:
                self.fail(f"bare integer {val}; only 0 (the zero ring) allowed")
            self.i += 1
            return ZeroRing()
        if kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        self.fail("expected a ring")

    def poly(self, start):
        coeffs = {}
        first = True
        while True:
            sign = 1
            if self.peek() in ("+", "-"):
                sign = -1 if self.peek() == "-" else 1
                self.i += 1
            elif not first:
                break
            c, deg = self.term()
            coeffs[deg] = coeffs.get(deg, 0) + sign * c
            first = False
            if self.peek() not in ("+", "-"):
                break
        nonzero = [d for d, c in coeffs.items() if c]
        deg = max(nonzero, default=0)
        if deg < 1:
            self.fail("modulus must have degree >= 1", start)
        if coeffs[deg] != 1:
            self.fail(f"modulus is not monic (leading coefficient "
                      f"{coeffs[deg]})", start)
        return tuple(coeffs.get(k, 0) for k in range(deg + 1))

    def term(self):
        c = 1
        explicit = False
        if self.peek() == "nat":
            c = self.take("nat")[1]
            explicit = True
            if self.peek() == "*":
                self.i += 1
                if self.peek() != "x":
                    self.fail("expected 'x' after '*'")
        if self.peek() == "x":
            self.i += 1
            deg = 1
            if self.peek() == "^":
                self.i += 1
                deg = self.take("nat")[1]
            return c, deg
        if not explicit:
            self.fail("expected a polynomial term")
        return c, 0


def parse_ring_spec(text: str) -> RingExpr:
    p = _Parser(text)
    node = p.expr()
    if p.peek() != "end":
        p.fail(f"unexpected {p.peek()!r}")
    return node


def build_ring(text: str) -> FiniteRing:
    """Parse ``text`` and construct the ring it names."""
    return parse_ring_spec(text).build()
