"""Text form of ring elements.

Grammar (``*`` binds tighter than ``+``/``-``; products associate to the left)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | atom
    atom   := SCALAR | BASIS_NAME | XPOW | "(" expr ")" | "(" SCALAR ("," SCALAR)+ ")"
    XPOW   := "x^" (EXP | "[" ints "]") | "x_" INT ("^" INT)? | "x"

Scalars are integers or ``num/den``; a parenthesised comma list is a
coordinate vector of ``R``.
"""

from __future__ import annotations

import re

from . import multiindex as mi
from .errors import OrelabError, ParseError
from .orering import OreElem, OreRing, s_neg, s_mul

_NUM = re.compile(r"\d+(?:/\d+)?")
_WORD = re.compile(r"[A-Za-z0-9_]+")


class _Parser:
    def __init__(self, ring: OreRing, text: str):
        self.ring = ring
        self.text = text
        self.pos = 0
        names = ring.algebra.basis_names or ()
        self.names = sorted(((n, i) for i, n in enumerate(names) if not n.isdigit()), key=lambda t: -len(t[0]))

    def error(self, msg):
        raise ParseError(f"{msg} at column {self.pos + 1} of {self.text!r}", where=f"column {self.pos + 1}")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> OreElem:
        if not self.text.strip():
            self.error("empty expression")
        u = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return u

    def expr(self):
        u = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            v = self.term()
            u = u + v if op == "+" else u - v
        return u

    def term(self):
        u = self.unary()
        while self.peek() == "*":
            self.pos += 1
            u = s_mul(u, self.unary())
        return u

    def unary(self):
        if self.peek() == "-":
            self.pos += 1
            return s_neg(self.unary())
        return self.atom()

    def scalar_text(self):
        self.skip()
        m = _NUM.match(self.text, self.pos)
        if not m:
            self.error("expected a scalar")
        self.pos = m.end()
        return m.group()

    def atom(self):
        ring, alg = self.ring, self.ring.algebra
        ch = self.peek()
        if not ch:
            self.error("unexpected end of input")
        if ch == "(":
            return self.paren()
        if ch.isdigit():
            c = self._scalar(self.scalar_text())
            return ring.const(alg.scalar(c))
        for name, i in self.names:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return ring.const(alg.basis(i))
        if ch == "x":
            return self.xpow()
        self.error(f"unexpected {ch!r}")

    def _scalar(self, s):
        try:
            return self.ring.base.parse(s)
        except OrelabError as exc:
            self.error(str(exc))

    def paren(self):
        start = self.pos
        self.eat("(")
        depth, j = 1, self.pos
        has_comma = False
        while j < len(self.text) and depth:
            c = self.text[j]
            depth += c == "("
            depth -= c == ")"
            has_comma |= c == "," and depth == 1
            j += 1
        if not has_comma:
            u = self.expr()
            self.eat(")")
            return u
        alg = self.ring.algebra
        coords = []
        while True:
            neg = False
            if self.peek() == "-":
                self.pos += 1
                neg = True
            c = self._scalar(self.scalar_text())
            coords.append(alg.base.neg(c) if neg else c)
            if self.peek() == ",":
                self.pos += 1
                continue
            self.eat(")")
            break
        if len(coords) != alg.dim:
            self.pos = start
            self.error(f"coordinate vector needs {alg.dim} entries")
        return self.ring.const(tuple(coords))

    def xpow(self):
        ring, mon = self.ring, self.ring.monoid
        self.pos += 1
        nxt = self.text[self.pos] if self.pos < len(self.text) else ""
        try:
            if nxt == "^":
                self.pos += 1
                if self.text.startswith("[", self.pos):
                    end = self.text.find("]", self.pos)
                    if end < 0:
                        self.error("unterminated multi-index")
                    tok = self.text[self.pos: end + 1]
                    self.pos = end + 1
                    return ring.x(mon.parse(tok))
                m = _WORD.match(self.text, self.pos)
                if not m:
                    self.error("expected an exponent")
                self.pos = m.end()
                tok = m.group()
                if not mon.is_finite and mon.k == 1 and tok.isdigit():
                    return ring.x((int(tok),))
                return ring.x(mon.parse(tok))
            if nxt == "_":
                self.pos += 1
                m = re.compile(r"\d+").match(self.text, self.pos)
                if not m or mon.is_finite or not 1 <= int(m.group()) <= mon.k:
                    self.error("bad variable index")
                self.pos = m.end()
                n = 1
                if self.text.startswith("^", self.pos):
                    self.pos += 1
                    e = re.compile(r"\d+").match(self.text, self.pos)
                    if not e:
                        self.error("expected an integer power")
                    self.pos = e.end()
                    n = int(e.group())
                return ring.x(mi.unit_index(mon.k, int(m.group()) - 1, n))
        except ParseError as exc:
            if exc.where is None:
                self.error(str(exc))
            raise
        if mon.is_finite or mon.k != 1:
            self.error("bare x needs a single variable")
        return ring.x((1,))


def parse_elem(ring: OreRing, text: str) -> OreElem:
    """Parse ``text`` into an element of ``ring``."""
    return _Parser(ring, text).parse()
