"""Ore monoid rings ``S = R[G; pi]``.

Elements are sparse formal sums ``sum_a r_a x^a`` and multiply by
``(r x^a)(s x^b) = sum_c r pi^a_c(s) x^(cb)``.  Besides arithmetic this
module computes the centre, its fixed part and a few identities specific
to Delta-generated rings (``right_expand``, ``center_shift``).
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

from . import multiindex as mi
from .coeffring import AddMap, Algebra
from .coeffring import center as algebra_center
from .errors import (
    HypothesesNotMet,
    InvalidMonoid,
    NotInvariantCoefficient,
    RingMismatch,
    UnsupportedBase,
    WrongMonoidKind,
    WrongPiKind,
    ZeroElement,
)
from .linalg import Subspace, nullspace
from .pistructure import (
    DEFAULT_WEIGHT_CAP,
    DeltaPi,
    PiStructure,
    check_all,
    check_axiom,
    classification_from_report,
    fixed_subring,
)

REQUIRED = ("D0", "D1", "D2", "D3", "D4")


class OreRing:
    """``R[G; pi]``; construction refuses anything that is not a G-derivation."""

    def __init__(self, algebra: Algebra, monoid, pi: PiStructure, cap: int = DEFAULT_WEIGHT_CAP):
        if pi.algebra != algebra or pi.monoid != monoid:
            raise ValueError("pi is defined over a different algebra or monoid")
        rep = monoid.validate()
        if not rep.valid:
            kinds = sorted({v[0] for v in rep.violations})
            if kinds == ["commutativity"]:
                raise HypothesesNotMet(["G commutative"])
            raise InvalidMonoid(f"invalid monoid: {', '.join(kinds)}")
        self.algebra = algebra
        self.monoid = monoid
        self.pi = pi
        self.cap = cap
        missing = [n for n in REQUIRED if not check_axiom(pi, n, cap).passed]
        if missing:
            raise HypothesesNotMet(missing)

    def __repr__(self):
        return f"OreRing({self.algebra!r}, {self.monoid!r}, {self.pi.kind})"

    @property
    def base(self):
        return self.algebra.base

    @property
    def is_finite(self) -> bool:
        return self.monoid.is_finite and self.base.is_finite

    @cached_property
    def axiom_report(self):
        return check_all(self.pi, self.cap)

    @cached_property
    def classification(self):
        return classification_from_report(self.axiom_report, self.pi.scope(self.cap))

    # constructors
    @property
    def zero(self) -> "OreElem":
        return OreElem(self, {})

    @property
    def one(self) -> "OreElem":
        return self.monomial(self.algebra.unit, self.monoid.identity)

    def monomial(self, r, a) -> "OreElem":
        self.monoid._check(a)
        return OreElem(self, {a: self.algebra.elem(r)})

    def const(self, r) -> "OreElem":
        return self.monomial(r, self.monoid.identity)

    def x(self, a) -> "OreElem":
        return self.monomial(self.algebra.unit, a)

    def elem(self, terms) -> "OreElem":
        return OreElem(self, {a: self.algebra.elem(r) for a, r in dict(terms).items()})

    def exponents(self, cap: int | None = None) -> list:
        return self.monoid.elements() if self.monoid.is_finite else self.monoid.elements(self.cap if cap is None else cap)

    def monomial_basis(self, cap: int | None = None) -> list:
        """``e_i x^a`` over exponents in range, exponent-major."""
        return [self.monomial(e, a) for a in self.exponents(cap) for e in self.algebra.basis_elements()]

    # flattening of a finite S into an Algebra
    def _index(self):
        return {a: n for n, a in enumerate(self.monoid.elements())}

    def flatten(self, u: "OreElem") -> tuple:
        d = self.algebra.dim
        idx = self._index()
        v = [self.base.zero] * (d * len(idx))
        for a, r in u.terms:
            v[idx[a] * d: idx[a] * d + d] = r
        return tuple(v)

    def unflatten(self, v) -> "OreElem":
        d = self.algebra.dim
        return OreElem(self, {a: tuple(v[n * d: n * d + d]) for n, a in enumerate(self.monoid.elements())})

    @cached_property
    def as_algebra(self) -> Algebra:
        """``S`` itself as a structure-constant algebra (finite G only)."""
        if not self.monoid.is_finite:
            raise WrongMonoidKind("only a finite exponent monoid gives a finite-dimensional S")
        basis = self.monomial_basis()
        sc = [[self.flatten(s_mul(u, v)) for v in basis] for u in basis]
        names = [fmt_elem(u) for u in basis]
        return Algebra(self.base, len(basis), sc, self.flatten(self.one), names)

    def tilde_map(self, a, b) -> AddMap:
        """``pi~^a_b`` as a map on the flattened S."""
        return AddMap.from_function(self.as_algebra, lambda v: self.flatten(extend_pi(self, a, b, self.unflatten(v))))


class OreElem:
    """Immutable sparse element of an :class:`OreRing`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: OreRing, terms):
        self.ring = ring
        items = terms.items() if isinstance(terms, dict) else terms
        key = ring.monoid.sort_key
        self.terms = tuple(sorted(((a, tuple(r)) for a, r in items if any(r)), key=lambda t: key(t[0])))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coeff(self, a):
        return self.as_dict().get(a, self.ring.algebra.zero)

    def support(self) -> list:
        return [a for a, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, OreElem) and other.ring is self.ring and other.terms == self.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"OreElem({fmt_elem(self)})"

    def __str__(self):
        return fmt_elem(self)

    def __add__(self, other):
        return s_add(self, other)

    def __sub__(self, other):
        return s_add(self, s_neg(other))

    def __neg__(self):
        return s_neg(self)

    def __mul__(self, other):
        return s_mul(self, other)


def _same(u: OreElem, v: OreElem) -> OreRing:
    if u.ring is not v.ring:
        raise RingMismatch("elements belong to different rings")
    return u.ring


def _accumulate(alg, acc: dict, a, r):
    cur = acc.get(a)
    acc[a] = r if cur is None else alg.add(cur, r)


def s_add(u: OreElem, v: OreElem) -> OreElem:
    ring = _same(u, v)
    acc = dict(u.terms)
    for a, r in v.terms:
        _accumulate(ring.algebra, acc, a, r)
    return OreElem(ring, acc)


def s_neg(u: OreElem) -> OreElem:
    alg = u.ring.algebra
    return OreElem(u.ring, {a: alg.neg(r) for a, r in u.terms})


def s_scale(c, u: OreElem) -> OreElem:
    alg = u.ring.algebra
    c = alg.base.coerce(c)
    return OreElem(u.ring, {a: alg.scale(c, r) for a, r in u.terms})


def s_mul(u: OreElem, v: OreElem) -> OreElem:
    """``(r x^a)(s x^b) = sum_c r pi^a_c(s) x^(cb)``, extended biadditively."""
    ring = _same(u, v)
    alg, pi, mon = ring.algebra, ring.pi, ring.monoid
    acc = {}
    for a, r in u.terms:
        sup = pi.support(a)
        for b, s in v.terms:
            for c in sup:
                t = alg.mul(r, pi.lookup(a, c).apply(s))
                if any(t):
                    _accumulate(alg, acc, mon.op(c, b), t)
    return OreElem(ring, acc)


def s_commutator(u: OreElem, v: OreElem) -> OreElem:
    return s_mul(u, v) - s_mul(v, u)


def s_associator(u: OreElem, v: OreElem, w: OreElem) -> OreElem:
    return s_mul(s_mul(u, v), w) - s_mul(u, s_mul(v, w))


def extend_pi(ring: OreRing, a, b, u: OreElem) -> OreElem:
    """``pi~^a_b(sum r_c x^c) = sum pi^a_b(r_c) x^c``."""
    m = ring.pi.lookup(a, b)
    return OreElem(ring, {c: m.apply(r) for c, r in u.terms})


# -- degree ------------------------------------------------------------------


def degree(u: OreElem):
    if not u.terms:
        raise ZeroElement("the zero element has no degree")
    return u.terms[-1][0]


def leading_coefficient(u: OreElem):
    degree(u)
    return u.terms[-1][1]


def is_monic(u: OreElem) -> bool:
    return leading_coefficient(u) == u.ring.algebra.unit


def is_constant(u: OreElem) -> bool:
    return not u.terms or degree(u) == u.ring.monoid.identity


def is_linear(u: OreElem) -> bool:
    mon = u.ring.monoid
    if mon.is_finite:
        raise WrongMonoidKind("linearity is defined over N^k only")
    if is_constant(u) or any(u.coeff(mon.identity)):
        return False
    return len(mi.support(degree(u))) == 1


# -- fixed ring and centre -----------------------------------------------------


def s_fixed(ring: OreRing):
    """``S^G`` described as ``(basis of R^G, "all of G")``."""
    return fixed_subring(ring.pi, ring.cap), "all of G"


def _coords(ring: OreRing, u: OreElem, index: dict) -> dict:
    """Sparse coordinates of ``u`` keyed by ``(exponent, basis index)``."""
    out = {}
    for a, r in u.terms:
        for i, c in enumerate(r):
            if c:
                out[(a, i)] = c
    for k in out:
        index.setdefault(k, len(index))
    return out


def solve_conditions(ring: OreRing, candidates: list, conditions) -> list:
    """Combinations of ``candidates`` killed by every linear map in ``conditions``.

    Each condition sends an element of S to an element of S.  Returned as
    elements, one per basis vector of the solution space.
    """
    base = ring.base
    if not candidates:
        return []
    index = {}
    rows = {}
    n = len(candidates)
    for cond in conditions:
        for j, u in enumerate(candidates):
            for key, c in _coords(ring, cond(u), index).items():
                rows.setdefault((id(cond), key), [base.zero] * n)[j] = c
    ker = nullspace(base, list(rows.values()), n)
    return [_combine(ring, candidates, k) for k in ker]


def _combine(ring, elems, coeffs) -> OreElem:
    out = ring.zero
    for c, u in zip(coeffs, elems):
        if c:
            out = out + s_scale(c, u)
    return out


def centrality_conditions(ring: OreRing, against: list) -> list:
    """``[s, t]``, ``(s, t, t')``, ``(t, s, t')``, ``(t, t', s)`` for ``t, t'`` in ``against``."""
    conds = [lambda s, t=t: s_commutator(s, t) for t in against]
    for t, t2 in product(against, repeat=2):
        conds.append(lambda s, t=t, t2=t2: s_associator(s, t, t2))
        conds.append(lambda s, t=t, t2=t2: s_associator(t, s, t2))
        conds.append(lambda s, t=t, t2=t2: s_associator(t, t2, s))
    return conds


def _generator_conditions(ring: OreRing) -> list:
    alg = ring.algebra
    rs = [ring.const(e) for e in alg.basis_elements()]
    conds = [lambda s, t=t: s_commutator(s, t) for t in rs]
    conds += [lambda s, g=g: s_commutator(s, ring.x(g)) for g in ring.monoid.generators()]
    for t, t2 in product(rs, repeat=2):
        conds.append(lambda s, t=t, t2=t2: s_associator(s, t, t2))
        conds.append(lambda s, t=t, t2=t2: s_associator(t, s, t2))
        conds.append(lambda s, t=t, t2=t2: s_associator(t, t2, s))
    return conds


def _a_posteriori(ring: OreRing, basis: list, cap: int) -> list:
    """Refine a candidate centre basis until it passes every monomial check in range."""
    monos = ring.monomial_basis(cap)
    conds = [lambda s, t=t: s_commutator(s, t) for t in monos]
    wt = (lambda u: 0) if ring.monoid.is_finite else (lambda u: mi.weight(u.terms[0][0]))
    for t, t2 in product(monos, repeat=2):
        if wt(t) + wt(t2) > cap:
            continue
        conds.append(lambda s, t=t, t2=t2: s_associator(s, t, t2))
        conds.append(lambda s, t=t, t2=t2: s_associator(t, s, t2))
        conds.append(lambda s, t=t, t2=t2: s_associator(t, t2, s))
    for cond in conds:
        if any(cond(b) for b in basis):
            basis = solve_conditions(ring, basis, [cond])
            if not basis:
                break
    return basis


def center(ring: OreRing, cap: int | None = None) -> list:
    """Basis of ``Z(S)``; exact for finite S, else of ``Z(S)`` restricted to weight ``<= cap``."""
    if ring.is_finite:
        flat = ring.as_algebra
        return [ring.unflatten(v) for v in algebra_center(flat)]
    cap = ring.cap if cap is None else cap
    cands = ring.monomial_basis(cap)
    basis = solve_conditions(ring, cands, _generator_conditions(ring))
    return _a_posteriori(ring, basis, cap)


def _invariant_conditions(ring: OreRing, cap) -> list:
    """Linear conditions forcing every coefficient into ``R^G``."""
    alg = ring.algebra
    fixed = fixed_subring(ring.pi, ring.cap)
    # functionals vanishing on R^G: nullspace of the transposed basis
    lam = nullspace(alg.base, [list(v) for v in fixed], alg.dim) if fixed else [
        tuple(alg.base.one if i == j else alg.base.zero for i in range(alg.dim)) for j in range(alg.dim)
    ]
    conds = []
    for a in ring.exponents(cap):
        for f in lam:
            def cond(s, a=a, f=f):
                r = s.coeff(a)
                val = alg.base.zero
                for x, y in zip(f, r):
                    val = alg.base.add(val, alg.base.mul(x, y))
                return ring.const(alg.scalar(val)) if val else ring.zero
            conds.append(cond)
    return conds


def zsg(ring: OreRing, cap: int | None = None) -> list:
    """Basis of ``Z(S)^G = Z(S) intersected with sum_a R^G x^a``."""
    cap = ring.cap if cap is None else cap
    if not ring.base.is_field:
        raise UnsupportedBase(f"{ring.base.tag} is not a field")
    return solve_conditions(ring, center(ring, cap), _invariant_conditions(ring, cap))


def span_contains(ring: OreRing, basis: list, u: OreElem) -> bool:
    index = {}
    vecs = [_coords(ring, b, index) for b in basis]
    target = _coords(ring, u, index)
    dense = lambda d: [d.get(k, ring.base.zero) for k in sorted(index, key=index.get)]
    sp = Subspace(ring.base, len(index), [dense(v) for v in vecs])
    return sp.contains(dense(target)) if index else True


# -- Delta-generated identities ----------------------------------------------


def _require_delta(ring: OreRing) -> DeltaPi:
    if not isinstance(ring.pi, DeltaPi):
        raise WrongPiKind("operation needs a Delta-generated ring")
    return ring.pi


def right_expand(ring: OreRing, r, f) -> OreElem:
    """``sum_{g <= f} (-1)^|g| C(f, g) x^(f-g) delta^g(r)``; equals ``r x^f``."""
    pi = _require_delta(ring)
    base = ring.base
    acc = ring.zero
    for g in mi.below(f):
        c = base.coerce(mi.sign(g) * mi.multi_binom(f, g))
        if not c:
            continue
        dr = pi.delta_power(g).apply(r)
        if any(dr):
            acc = acc + s_scale(c, s_mul(ring.x(mi.mi_sub(f, g)), ring.const(dr)))
    return acc


def center_shift(ring: OreRing, a: OreElem, g) -> OreElem:
    """``b_g = sum_{f >= g} C(f, g) a_f x^(f-g)``, coefficients written on the left."""
    pi = _require_delta(ring)
    alg = ring.algebra
    kernel = Subspace(alg.base, alg.dim, fixed_subring(pi)) if alg.base.is_field else None
    acc = {}
    for f, r in a.terms:
        if not mi.mi_le(g, f):
            continue
        if f != g and kernel is not None and not kernel.contains(r):
            raise NotInvariantCoefficient(f"coefficient at {mi.fmt(f)} is not in R_Delta")
        c = mi.multi_binom_in(alg.base, f, g)
        if c:
            _accumulate(alg, acc, mi.mi_sub(f, g), alg.scale(c, r))
    return OreElem(ring, acc)


# -- text and JSON -------------------------------------------------------------


def fmt_coeff(alg: Algebra, r) -> str:
    base = alg.base
    if alg.basis_names is None:
        return "(" + ",".join(base.fmt(c) for c in r) + ")"
    parts = []
    for c, name in zip(r, alg.basis_names):
        if not c:
            continue
        s = base.fmt(c)
        if s == "1":
            parts.append(name)
        elif s == "-1":
            parts.append("-" + name)
        elif name == "1" and alg.basis(alg.basis_names.index(name)) == alg.unit:
            parts.append(s)
        else:
            parts.append(f"{s}*{name}")
    return " + ".join(parts) if parts else "0"


def fmt_elem(u: OreElem, descending: bool = False) -> str:
    """``coef*x^exp + ...``; constant-first unless ``descending``."""
    ring = u.ring
    alg, mon = ring.algebra, ring.monoid
    if not u.terms:
        return "0"
    out = []
    terms = reversed(u.terms) if descending else u.terms
    for a, r in terms:
        if a == mon.identity:
            out.append(fmt_coeff(alg, r))
            continue
        xs = "x^" + mon.fmt(a)
        if r == alg.unit:
            out.append(xs)
            continue
        c = fmt_coeff(alg, r)
        if alg.basis_names is not None and " + " in c:
            c = f"({c})"
        out.append(f"{c}*{xs}")
    return " + ".join(out)


def elem_to_json(u: OreElem) -> list:
    """Terms as ``{exp, coords}``, highest exponent first."""
    fmt = u.ring.base.fmt
    return [{"exp": u.ring.monoid.fmt(a), "coords": [fmt(c) for c in r]} for a, r in reversed(u.terms)]
