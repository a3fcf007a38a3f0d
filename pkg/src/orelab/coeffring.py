"""Finite-dimensional, possibly non-associative, unital coefficient algebras.

An algebra ``R`` is given by structure constants ``c[i][j][k]`` with
``e_i * e_j = sum_k c[i][j][k] e_k`` over an exact :class:`~orelab.scalars.Base`.
Elements are coordinate tuples.  Additive maps ``R -> R`` are base-linear
and stored as square matrices acting on column vectors, so column ``j`` of
an :class:`AddMap` is the image of ``e_j``.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

from . import linalg
from .errors import DimensionMismatch, OrbitBoundExceeded, UnitAxiomViolation
from .linalg import Subspace, nullspace, unit_vector
from .scalars import Base

DEFAULT_ORBIT_BOUND = 64


class Algebra:
    """A unital algebra over ``base`` with the given structure constants."""

    def __init__(self, base: Base, dim: int, structure_constants, unit, basis_names=None):
        if dim < 1:
            raise DimensionMismatch("algebra dimension must be positive")
        sc = structure_constants
        if len(sc) != dim or any(len(row) != dim for row in sc) or any(
            len(cell) != dim for row in sc for cell in row
        ):
            raise DimensionMismatch(f"structure constants must be {dim}x{dim}x{dim}")
        if len(unit) != dim:
            raise DimensionMismatch(f"unit must have length {dim}")
        self.base = base
        self.dim = dim
        self.sc = tuple(tuple(tuple(base.coerce(c) for c in cell) for cell in row) for row in sc)
        self.unit = tuple(base.coerce(u) for u in unit)
        self.basis_names = tuple(basis_names) if basis_names else None
        # sparse (i, j, k, c) list drives multiplication
        self._terms = tuple(
            (i, j, k, c)
            for i in range(dim)
            for j in range(dim)
            for k, c in enumerate(self.sc[i][j])
            if c
        )
        for i in range(dim):
            e = self.basis(i)
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise UnitAxiomViolation(f"claimed unit fails on basis vector e_{i}")

    def __repr__(self):
        return f"Algebra({self.base.tag}, dim={self.dim})"

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.base == other.base
            and self.sc == other.sc
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.base, self.sc, self.unit))

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def zero(self) -> tuple:
        return (self.base.zero,) * self.dim

    def basis(self, i: int) -> tuple:
        return unit_vector(self.base, self.dim, i)

    def basis_elements(self) -> list:
        return [self.basis(i) for i in range(self.dim)]

    def elem(self, coords) -> tuple:
        if len(coords) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return tuple(self.base.coerce(c) for c in coords)

    def scalar(self, c) -> tuple:
        return tuple(self.base.mul(self.base.coerce(c), u) for u in self.unit)

    def _check(self, *xs):
        for x in xs:
            if len(x) != self.dim:
                raise DimensionMismatch(f"element of length {len(x)} in algebra of dim {self.dim}")

    def add(self, a, b):
        self._check(a, b)
        return linalg.vadd(self.base, a, b)

    def sub(self, a, b):
        self._check(a, b)
        return linalg.vsub(self.base, a, b)

    def neg(self, a):
        self._check(a)
        return tuple(self.base.neg(x) for x in a)

    def scale(self, c, a):
        return linalg.vscale(self.base, c, a)

    def mul(self, a, b):
        self._check(a, b)
        base = self.base
        out = [base.zero] * self.dim
        add, mul = base.add, base.mul
        for i, j, k, c in self._terms:
            ai = a[i]
            if ai:
                bj = b[j]
                if bj:
                    out[k] = add(out[k], mul(mul(ai, bj), c))
        return tuple(out)

    def is_zero(self, a) -> bool:
        return not any(a)

    def commutator(self, a, b):
        return self.sub(self.mul(a, b), self.mul(b, a))

    def associator(self, a, b, c):
        return self.sub(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)))

    def left_mult(self, a) -> "AddMap":
        return AddMap.from_function(self, lambda r: self.mul(a, r))

    def right_mult(self, a) -> "AddMap":
        return AddMap.from_function(self, lambda r: self.mul(r, a))

    def elements(self):
        """All elements (finite base only), in lexicographic coordinate order."""
        return (tuple(v) for v in product(self.base.elements(), repeat=self.dim))

    def inverse(self, a):
        """Two-sided inverse of ``a`` if one exists, else None."""
        rows = self.left_mult(a).rows
        x = linalg.solve(self.base, rows, list(self.unit), self.dim)
        if x is None or self.mul(x, a) != self.unit:
            return None
        return x

    @cached_property
    def is_associative(self) -> bool:
        es = self.basis_elements()
        return all(not any(self.associator(a, b, c)) for a in es for b in es for c in es)

    @cached_property
    def is_commutative(self) -> bool:
        es = self.basis_elements()
        return all(not any(self.commutator(a, b)) for a in es for b in es)


def make_algebra(base: Base, dim: int, structure_constants, unit, basis_names=None) -> Algebra:
    return Algebra(base, dim, structure_constants, unit, basis_names)


def is_associative(alg: Algebra) -> bool:
    return alg.is_associative


def characteristic(alg: Algebra) -> int:
    return alg.characteristic


def commutator(alg: Algebra, a, b):
    return alg.commutator(a, b)


def associator(alg: Algebra, a, b, c):
    return alg.associator(a, b, c)


# -- structural subsets ---------------------------------------------------


def solution_space(alg: Algebra, conditions) -> list:
    """Elements ``r`` with ``f(r) == 0`` for every linear ``f`` in ``conditions``.

    Each condition maps an element to an element; it is evaluated on the
    basis to build the linear system.  Returns a basis (field) or a
    generating set (``Z_n``).
    """
    es = alg.basis_elements()
    rows = []
    for f in conditions:
        imgs = [f(e) for e in es]
        for k in range(len(imgs[0])):
            row = [img[k] for img in imgs]
            if any(row):
                rows.append(row)
    return nullspace(alg.base, rows, alg.dim)


def commuter(alg: Algebra) -> list:
    es = alg.basis_elements()
    return solution_space(alg, [lambda r, s=s: alg.commutator(r, s) for s in es])


def _nucleus_conditions(alg: Algebra, which: str) -> list:
    es = alg.basis_elements()
    pairs = [(s, t) for s in es for t in es]
    conds = []
    if which in ("left", "full"):
        conds += [lambda r, s=s, t=t: alg.associator(r, s, t) for s, t in pairs]
    if which in ("middle", "full"):
        conds += [lambda r, s=s, t=t: alg.associator(s, r, t) for s, t in pairs]
    if which in ("right", "full"):
        conds += [lambda r, s=s, t=t: alg.associator(s, t, r) for s, t in pairs]
    if not conds:
        raise ValueError(f"unknown nucleus {which!r}")
    return conds


def nucleus(alg: Algebra, which: str = "full") -> list:
    """Basis of the left, middle, right or full nucleus."""
    return solution_space(alg, _nucleus_conditions(alg, which))


def center(alg: Algebra) -> list:
    es = alg.basis_elements()
    conds = _nucleus_conditions(alg, "full") + [lambda r, s=s: alg.commutator(r, s) for s in es]
    return solution_space(alg, conds)


def span(alg: Algebra, vectors) -> Subspace:
    return Subspace(alg.base, alg.dim, vectors)


# -- additive maps --------------------------------------------------------


class AddMap:
    """Base-linear endomorphism of an algebra, as a ``dim x dim`` matrix."""

    __slots__ = ("base", "dim", "rows", "_hash")

    def __init__(self, base: Base, rows):
        self.base = base
        self.rows = tuple(tuple(base.coerce(x) for x in r) for r in rows)
        self.dim = len(self.rows)
        if any(len(r) != self.dim for r in self.rows):
            raise DimensionMismatch("additive map matrix must be square")
        self._hash = None

    @classmethod
    def identity(cls, base: Base, dim: int) -> "AddMap":
        return cls(base, [[base.one if i == j else base.zero for j in range(dim)] for i in range(dim)])

    @classmethod
    def zero(cls, base: Base, dim: int) -> "AddMap":
        return cls(base, [[base.zero] * dim for _ in range(dim)])

    @classmethod
    def from_function(cls, alg: Algebra, f) -> "AddMap":
        cols = [f(e) for e in alg.basis_elements()]
        return cls(alg.base, [[cols[j][i] for j in range(alg.dim)] for i in range(alg.dim)])

    def __eq__(self, other):
        return isinstance(other, AddMap) and self.base == other.base and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.base, self.rows))
        return self._hash

    def __repr__(self):
        return f"AddMap({[[self.base.fmt(x) for x in r] for r in self.rows]})"

    def __call__(self, v):
        return self.apply(v)

    def apply(self, v):
        if len(v) != self.dim:
            raise DimensionMismatch(f"map of dim {self.dim} applied to vector of length {len(v)}")
        b = self.base
        add, mul = b.add, b.mul
        out = []
        for row in self.rows:
            acc = b.zero
            for x, y in zip(row, v):
                if x and y:
                    acc = add(acc, mul(x, y))
            out.append(acc)
        return tuple(out)

    def compose(self, other: "AddMap") -> "AddMap":
        """``self o other`` (apply ``other`` first)."""
        if self.dim != other.dim:
            raise DimensionMismatch("composing maps of different dimension")
        b = self.base
        add, mul = b.add, b.mul
        cols = list(zip(*other.rows))
        rows = []
        for r in self.rows:
            out = []
            for c in cols:
                acc = b.zero
                for x, y in zip(r, c):
                    if x and y:
                        acc = add(acc, mul(x, y))
                out.append(acc)
            rows.append(out)
        return AddMap(b, rows)

    def __matmul__(self, other):
        return self.compose(other)

    def __add__(self, other):
        b = self.base
        return AddMap(b, [[b.add(x, y) for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        b = self.base
        return AddMap(b, [[b.sub(x, y) for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "AddMap":
        b = self.base
        c = b.coerce(c)
        return AddMap(b, [[b.mul(c, x) for x in r] for r in self.rows])

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_identity(self) -> bool:
        return self == AddMap.identity(self.base, self.dim)

    def power(self, n: int) -> "AddMap":
        out = AddMap.identity(self.base, self.dim)
        sq = self
        while n:
            if n & 1:
                out = out.compose(sq)
            n >>= 1
            if n:
                sq = sq.compose(sq)
        return out

    def flat(self) -> tuple:
        return tuple(x for r in self.rows for x in r)

    def kernel(self) -> list:
        return nullspace(self.base, self.rows, self.dim)


def compose(m1: AddMap, m2: AddMap) -> AddMap:
    return m1.compose(m2)


def apply(m: AddMap, r):
    return m.apply(r)


def map_power_orbit(m: AddMap, bound: int = DEFAULT_ORBIT_BOUND) -> list:
    """``[m^0, m^1, ...]`` up to (excluding) the first repeated power.

    Over a finite base the orbit always closes.  Over Q the length is
    capped at ``bound`` and exceeding it raises :class:`OrbitBoundExceeded`.
    """
    orbit = [AddMap.identity(m.base, m.dim)]
    seen = {orbit[0]: 0}
    while True:
        nxt = orbit[-1].compose(m)
        if nxt in seen:
            return orbit
        if not m.base.is_finite and len(orbit) >= bound:
            raise OrbitBoundExceeded(f"no repetition among the first {bound} powers")
        seen[nxt] = len(orbit)
        orbit.append(nxt)


def orbit_power(m: AddMap, n: int, orbit=None, bound: int = DEFAULT_ORBIT_BOUND) -> AddMap:
    """``m^n`` read off the (eventually periodic) power orbit."""
    orbit = orbit if orbit is not None else map_power_orbit(m, bound)
    L = len(orbit)
    if n < L:
        return orbit[n]
    mu = orbit.index(orbit[-1].compose(m))
    return orbit[mu + (n - mu) % (L - mu)]


def is_derivation(alg: Algebra, m: AddMap) -> bool:
    """Leibniz rule ``m(rs) = m(r)s + r m(s)`` on all basis pairs."""
    es = alg.basis_elements()
    for r in es:
        mr = m.apply(r)
        for s in es:
            lhs = m.apply(alg.mul(r, s))
            rhs = alg.add(alg.mul(mr, s), alg.mul(r, m.apply(s)))
            if lhs != rhs:
                return False
    return True


def inner_derivation(alg: Algebra, a) -> AddMap:
    """``r -> a r - r a``."""
    return AddMap.from_function(alg, lambda r: alg.commutator(a, r))
