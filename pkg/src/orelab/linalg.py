"""Exact linear algebra over a :class:`~orelab.scalars.Base`.

Vectors are tuples of scalars.  Over a field everything goes through the
incremental reduced-echelon :class:`Subspace`; over ``Z_n`` kernels are
returned as generating sets of the solution module, obtained from an
integer kernel lattice by unimodular column reduction.
"""

from __future__ import annotations

from .errors import UnsupportedBase
from .scalars import Base


def zero_vector(base: Base, n: int) -> tuple:
    return (base.zero,) * n


def is_zero_vector(v) -> bool:
    return not any(v)


def vadd(base, u, v):
    add = base.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vsub(base, u, v):
    sub = base.sub
    return tuple(sub(a, b) for a, b in zip(u, v))


def vscale(base, c, v):
    mul = base.mul
    return tuple(mul(c, a) for a in v)


def unit_vector(base, n, i):
    v = [base.zero] * n
    v[i] = base.one
    return tuple(v)


class Subspace:
    """A subspace of ``base^dim`` kept in reduced row-echelon form.

    Mutable while being built (``add``), but every public query returns
    immutable tuples.  Requires a field base.
    """

    def __init__(self, base: Base, dim: int, vectors=()):
        if not base.is_field:
            raise UnsupportedBase(f"{base.tag} is not a field")
        self.base = base
        self.dim = dim
        self._rows: dict[int, list] = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> tuple:
        return tuple(tuple(self._rows[c]) for c in sorted(self._rows))

    @property
    def pivots(self) -> tuple:
        return tuple(sorted(self._rows))

    def reduce(self, v) -> list:
        """Residue of ``v`` modulo the subspace (zero iff ``v`` is contained)."""
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in ambient dim {self.dim}")
        b = self.base
        sub, mul = b.sub, b.mul
        w = list(v)
        for c, row in self._rows.items():
            f = w[c]
            if f:
                for j in range(c, self.dim):
                    rj = row[j]
                    if rj:
                        w[j] = sub(w[j], mul(f, rj))
        return w

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    __contains__ = contains

    def add(self, v) -> bool:
        """Insert ``v``; return True if the subspace grew."""
        w = self.reduce(v)
        c = next((j for j, x in enumerate(w) if x), None)
        if c is None:
            return False
        b = self.base
        inv = b.inv(w[c])
        w = [b.mul(inv, x) for x in w]
        sub, mul = b.sub, b.mul
        for row in self._rows.values():
            f = row[c]
            if f:
                for j in range(c, self.dim):
                    if w[j]:
                        row[j] = sub(row[j], mul(f, w[j]))
        self._rows[c] = w
        return True

    def copy(self) -> "Subspace":
        s = Subspace(self.base, self.dim)
        s._rows = {c: list(r) for c, r in self._rows.items()}
        return s

    def is_full(self) -> bool:
        return self.rank == self.dim

    def is_zero(self) -> bool:
        return self.rank == 0

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim == other.dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, rank={self.rank})"

    def intersect(self, other: "Subspace") -> "Subspace":
        U, W = self.basis, other.basis
        if not U or not W:
            return Subspace(self.base, self.dim)
        b = self.base
        # columns: u_1..u_a, -w_1..-w_c ; kernel gives coefficients
        cols = list(U) + [tuple(b.neg(x) for x in w) for w in W]
        rows = [[col[i] for col in cols] for i in range(self.dim)]
        ker = nullspace(b, rows, len(cols))
        out = Subspace(b, self.dim)
        for k in ker:
            v = [b.zero] * self.dim
            for coef, u in zip(k[: len(U)], U):
                if coef:
                    v = [b.add(x, b.mul(coef, y)) for x, y in zip(v, u)]
            out.add(v)
        return out

    def join(self, other: "Subspace") -> "Subspace":
        out = self.copy()
        for v in other.basis:
            out.add(v)
        return out


def rref(base: Base, rows, ncols: int):
    """Reduced row-echelon form; returns ``(rows, pivots)``."""
    s = Subspace(base, ncols, rows)
    return s.basis, s.pivots


def rank(base: Base, rows, ncols: int) -> int:
    return Subspace(base, ncols, rows).rank


def nullspace(base: Base, rows, ncols: int) -> list:
    """Basis (field) or generating set (``Z_n``) of ``{x : row . x = 0}``.

    Over a field the basis is the canonical one read off the RREF, with
    free variables in increasing column order.
    """
    if not base.is_field:
        return _nullspace_mod_n(base, rows, ncols)
    red, piv = rref(base, rows, ncols)
    pivset = set(piv)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [base.zero] * ncols
        v[free] = base.one
        for r, c in zip(red, piv):
            if r[free]:
                v[c] = base.neg(r[free])
        out.append(tuple(v))
    return out


def solve(base: Base, rows, rhs, ncols: int):
    """One solution of ``A x = rhs`` (free variables set to 0), or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = rref(base, aug, ncols + 1)
    if ncols in piv:
        return None
    x = [base.zero] * ncols
    for r, c in zip(red, piv):
        x[c] = r[ncols]
    return tuple(x)


def express(base: Base, vectors, target):
    """Coefficients ``c`` with ``sum c_i vectors[i] == target``, or None."""
    n = len(target)
    rows = [[v[j] for v in vectors] for j in range(n)]
    return solve(base, rows, list(target), len(vectors))


def _egcd(a: int, b: int):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def integer_kernel(rows, ncols: int) -> list:
    """Lattice basis of the integer kernel of an integer matrix."""
    m = len(rows)
    cols = [[rows[i][j] for i in range(m)] for j in range(ncols)]
    U = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    start = 0
    for i in range(m):
        if start >= ncols:
            break
        for j in range(start + 1, ncols):
            b = cols[j][i]
            if b == 0:
                continue
            a = cols[start][i]
            g, x, y = _egcd(a, b)
            if g < 0:
                g, x, y = -g, -x, -y
            p, q = -b // g, a // g
            cp, cj = cols[start], cols[j]
            cols[start] = [x * u + y * v for u, v in zip(cp, cj)]
            cols[j] = [p * u + q * v for u, v in zip(cp, cj)]
            up, uj = U[start], U[j]
            U[start] = [x * u + y * v for u, v in zip(up, uj)]
            U[j] = [p * u + q * v for u, v in zip(up, uj)]
        if cols[start][i] != 0:
            start += 1
    return [tuple(u) for u in U[start:]]


def _nullspace_mod_n(base: Base, rows, ncols: int) -> list:
    n = base.order()
    m = len(rows)
    big = [list(map(int, r)) + [n if k == i else 0 for k in range(m)] for i, r in enumerate(rows)]
    gens = []
    seen = set()
    for z in integer_kernel(big, ncols + m):
        v = tuple(int(x) % n for x in z[:ncols])
        if any(v) and v not in seen:
            seen.add(v)
            gens.append(v)
    if not rows:
        gens = [unit_vector(base, ncols, i) for i in range(ncols)]
    return sorted(gens)
