"""Exact base scalars: prime fields F_p, modular rings Z_n and the rationals.

Scalar values are plain Python objects (``int`` residues or ``Fraction``);
a :class:`Base` instance carries the arithmetic.  Bases are immutable and
compare by tag, so they can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import sympy

from .errors import NotPrime, ParseError, UnsupportedBase


class Base:
    """Common interface; see :class:`PrimeField`, :class:`ModRing`, :class:`Rationals`."""

    tag: str
    characteristic: int
    is_field: bool
    is_finite: bool

    zero = 0
    one = 1

    def __eq__(self, other):
        return isinstance(other, Base) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"Base({self.tag!r})"

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def fmt(self, a) -> str:
        return str(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def elements(self):
        raise UnsupportedBase(f"{self.tag} is infinite")

    def order(self) -> int:
        raise UnsupportedBase(f"{self.tag} is infinite")


class _Modular(Base):
    is_finite = True

    def __init__(self, n: int):
        self.n = n
        self.characteristic = n

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return a * b % self.n

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return x.numerator % self.n
            return x.numerator * self.inv(x.denominator % self.n) % self.n
        return int(x) % self.n

    def parse(self, s: str):
        try:
            return self.coerce(Fraction(str(s).strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {s!r} for {self.tag}") from exc

    def elements(self):
        return range(self.n)

    def order(self) -> int:
        return self.n


class PrimeField(_Modular):
    is_field = True

    def __init__(self, p: int):
        if p < 2 or not sympy.isprime(p):
            raise NotPrime(f"{p} is not prime")
        super().__init__(p)
        self.tag = f"Fp:{p}"

    def inv(self, a):
        if a % self.n == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.n)


class ModRing(_Modular):
    is_field = False

    def __init__(self, n: int):
        if n < 2:
            raise ParseError(f"modulus must be >= 2, got {n}")
        super().__init__(n)
        self.tag = f"Zn:{n}"

    def inv(self, a):
        if gcd(a, self.n) != 1:
            raise ZeroDivisionError(f"{a} is not a unit mod {self.n}")
        return pow(a, -1, self.n)


class Rationals(Base):
    tag = "Q"
    characteristic = 0
    is_field = True
    is_finite = False

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def coerce(self, x):
        return Fraction(x)

    def parse(self, s: str):
        try:
            return Fraction(str(s).strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {s!r}") from exc

    def fmt(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


QQ = Rationals()


def base_from_tag(tag: str) -> Base:
    """Parse ``"Fp:5"``, ``"Zn:4"`` or ``"Q"``."""
    tag = tag.strip()
    if tag == "Q":
        return QQ
    kind, _, num = tag.partition(":")
    try:
        n = int(num)
    except ValueError:
        raise ParseError(f"bad base tag {tag!r}") from None
    if kind == "Fp":
        return PrimeField(n)
    if kind == "Zn":
        return ModRing(n)
    raise ParseError(f"bad base tag {tag!r}")
