"""Exponent monoids: finite commutative monoids and the free monoid N^k.

Finite monoid elements are ints ``0..size-1``; elements of N^k are
multi-index tuples.  Both kinds expose the same small surface (``op``,
``factorizations``, ``cmp``, ``sort_key``, ``identity``, ...) so the Ore
ring code does not care which one it is given.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import multiindex as mi
from .errors import InvalidMonoid, OutOfRange, ParseError


@dataclass(frozen=True)
class MonoidReport:
    valid: bool
    violations: tuple = ()

    def to_json(self):
        return {"valid": self.valid, "violations": [list(v) for v in self.violations]}


class FiniteMonoid:
    kind = "finite"
    is_finite = True

    def __init__(self, size: int, identity: int, cayley, order=None, names=None):
        if size < 1:
            raise InvalidMonoid("monoid must be nonempty")
        if len(cayley) != size or any(len(r) != size for r in cayley):
            raise InvalidMonoid(f"cayley table must be {size}x{size}")
        self.size = size
        self.identity = identity
        self.cayley = tuple(tuple(int(x) for x in r) for r in cayley)
        self.order = tuple(order) if order is not None else tuple(range(size))
        self.names = tuple(names) if names else tuple(str(i) for i in range(size))
        if len(self.names) != size or len(set(self.names)) != size:
            raise InvalidMonoid("names must be distinct, one per element")
        self._rank = {a: i for i, a in enumerate(self.order)} if sorted(self.order) == list(range(size)) else None

    def __repr__(self):
        return f"FiniteMonoid(size={self.size})"

    def __eq__(self, other):
        return isinstance(other, FiniteMonoid) and (
            self.identity,
            self.cayley,
            self.order,
        ) == (other.identity, other.cayley, other.order)

    def __hash__(self):
        return hash((self.identity, self.cayley, self.order))

    def _check(self, *xs):
        for a in xs:
            if not isinstance(a, int) or not 0 <= a < self.size:
                raise OutOfRange(f"{a!r} is not an element of a monoid of size {self.size}")

    def op(self, a, b):
        self._check(a, b)
        c = self.cayley[a][b]
        if not 0 <= c < self.size:
            raise OutOfRange(f"cayley[{a}][{b}] = {c} outside the monoid")
        return c

    def elements(self):
        """All elements in the supplied order."""
        return list(self.order)

    def generators(self):
        return [a for a in self.order if a != self.identity]

    def factorizations(self, c):
        self._check(c)
        return [(d, e) for d in self.order for e in self.order if self.cayley[d][e] == c]

    def sort_key(self, a):
        return self._rank[a]

    def cmp(self, a, b) -> int:
        self._check(a, b)
        ka, kb = self._rank[a], self._rank[b]
        return (ka > kb) - (ka < kb)

    def validate(self) -> MonoidReport:
        v = []
        n, t, e = self.size, self.cayley, self.identity
        if not 0 <= e < n:
            v.append(("identity", e))
        for a, b in product(range(n), repeat=2):
            if not 0 <= t[a][b] < n:
                v.append(("closure", a, b))
        if v:
            return MonoidReport(False, tuple(v))
        for a in range(n):
            if t[e][a] != a or t[a][e] != a:
                v.append(("identity", a))
        for a, b in product(range(n), repeat=2):
            if t[a][b] != t[b][a]:
                v.append(("commutativity", a, b))
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                v.append(("associativity", a, b, c))
        if self._rank is None:
            v.append(("order", "not a permutation"))
        elif self.order[0] != e:
            v.append(("order", "identity must come first"))
        return MonoidReport(not v, tuple(v))

    def fmt(self, a) -> str:
        return self.names[a]

    def parse(self, s):
        if isinstance(s, int) and not isinstance(s, bool):
            self._check(s)
            return s
        s = str(s).strip()
        if s in self.names:
            return self.names.index(s)
        if s.isdigit() and int(s) < self.size:
            return int(s)
        raise ParseError(f"unknown monoid element {s!r}")

    def to_json(self):
        d = {
            "size": self.size,
            "identity": self.identity,
            "cayley": [list(r) for r in self.cayley],
            "order": list(self.order),
        }
        if self.names != tuple(str(i) for i in range(self.size)):
            d["names"] = list(self.names)
        return d


class FreeCommutativeMonoid:
    """N^k under pointwise addition, ordered graded-lexicographically."""

    kind = "free"
    is_finite = False

    def __init__(self, k: int):
        if k < 0:
            raise InvalidMonoid("arity must be non-negative")
        self.k = k
        self.identity = (0,) * k

    def __repr__(self):
        return f"FreeCommutativeMonoid({self.k})"

    def __eq__(self, other):
        return isinstance(other, FreeCommutativeMonoid) and other.k == self.k

    def __hash__(self):
        return hash(("free", self.k))

    def _check(self, *xs):
        for a in xs:
            if not isinstance(a, tuple) or len(a) != self.k or any(
                not isinstance(x, int) or x < 0 for x in a
            ):
                raise OutOfRange(f"{a!r} is not an element of N^{self.k}")

    def op(self, a, b):
        self._check(a, b)
        return mi.mi_add(a, b)

    def elements(self, cap: int):
        """Elements of weight ``<= cap`` in graded-lex order."""
        return mi.up_to_weight(self.k, cap)

    def generators(self):
        return [mi.unit_index(self.k, i) for i in range(self.k)]

    def factorizations(self, c):
        self._check(c)
        return [(d, mi.mi_sub(c, d)) for d in mi.below(c)]

    def sort_key(self, a):
        return mi.sort_key(a)

    def cmp(self, a, b) -> int:
        return mi.graded_lex_cmp(a, b)

    def validate(self) -> MonoidReport:
        return MonoidReport(True)

    def fmt(self, a) -> str:
        return mi.fmt(a)

    def parse(self, s):
        if isinstance(s, (list, tuple)):
            a = tuple(int(x) for x in s)
        else:
            s = str(s).strip()
            if not (s.startswith("[") and s.endswith("]")):
                raise ParseError(f"expected a bracketed multi-index, got {s!r}")
            inner = s[1:-1].strip()
            try:
                a = tuple(int(x) for x in inner.split(",")) if inner else ()
            except ValueError:
                raise ParseError(f"bad multi-index {s!r}") from None
        if len(a) != self.k or any(x < 0 for x in a):
            raise ParseError(f"{s!r} is not an element of N^{self.k}")
        return a

    def to_json(self):
        return {"free_commutative": self.k}


MonoidSpec = FiniteMonoid | FreeCommutativeMonoid


def m_op(spec, a, b):
    return spec.op(a, b)


def factorizations(spec, c):
    return spec.factorizations(c)


def m_cmp(spec, a, b) -> int:
    return spec.cmp(a, b)


def validate(spec) -> MonoidReport:
    return spec.validate()


def two_element_monoid(names=("0", "g")) -> FiniteMonoid:
    """``{0, g}`` with ``g + g = g``: the cyclic monoid of order 2 that is not a group."""
    return FiniteMonoid(2, 0, [[0, 1], [1, 1]], [0, 1], names)
