"""The family of maps ``pi^a_b : R -> R`` and its axioms D0-D8.

Two kinds are supported: :class:`ExplicitPi`, a finitely supported table
over any exponent monoid, and :class:`DeltaPi`, generated from a family of
additive maps ``delta_1..delta_k`` on ``N^k`` by
``pi^f_g = C(f, g) * delta^(f - g)``.

Over ``N^k`` every check quantifies over exponents of weight at most
``cap``; such results are "verified up to weight cap", never proofs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import multiindex as mi
from .coeffring import AddMap, Algebra
from .errors import DimensionMismatch
from .linalg import nullspace
from .monoid import FreeCommutativeMonoid

DEFAULT_WEIGHT_CAP = 4

AXIOMS = ("D0", "D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8")


@dataclass(frozen=True, eq=False)
class DeltaFamily:
    algebra: Algebra
    deltas: tuple

    def __post_init__(self):
        object.__setattr__(self, "deltas", tuple(self.deltas))
        one = self.algebra.unit
        for i, d in enumerate(self.deltas):
            if d.dim != self.algebra.dim:
                raise DimensionMismatch(f"delta_{i + 1} has dimension {d.dim}")
            if any(d.apply(one)):
                raise ValueError(f"delta_{i + 1}(1) != 0")

    @property
    def k(self) -> int:
        return len(self.deltas)


def r_delta(family: DeltaFamily) -> list:
    """Basis of the joint kernel of the family (all of R when empty)."""
    alg = family.algebra
    rows = [r for d in family.deltas for r in d.rows]
    return nullspace(alg.base, rows, alg.dim)


def is_delta_commutative(family: DeltaFamily) -> bool:
    ds = family.deltas
    return all(ds[i] @ ds[j] == ds[j] @ ds[i] for i in range(len(ds)) for j in range(i + 1, len(ds)))


def is_kernel_derivation_family(family: DeltaFamily, side: str = "left") -> bool:
    """Every delta is left (right) R_Delta-linear."""
    alg = family.algebra
    return all(_is_linear_over(alg, d, r_delta(family), side) is None for d in family.deltas)


def _is_linear_over(alg: Algebra, m: AddMap, scalars, side: str):
    """First ``(t_index, r_index)`` where ``m`` fails to be ``side``-linear over ``scalars``."""
    for ti, t in enumerate(scalars):
        for ri in range(alg.dim):
            r = alg.basis(ri)
            if side == "left":
                ok = m.apply(alg.mul(t, r)) == alg.mul(t, m.apply(r))
            else:
                ok = m.apply(alg.mul(r, t)) == alg.mul(m.apply(r), t)
            if not ok:
                return ti, ri
    return None


def leibniz_power_check(alg: Algebra, delta: AddMap, n_max: int) -> bool:
    """``delta^n(rs) = sum_k C(n,k) delta^(n-k)(r) delta^k(s)`` for all basis pairs, ``n <= n_max``."""
    base = alg.base
    powers = [AddMap.identity(base, alg.dim)]
    for _ in range(n_max):
        powers.append(powers[-1] @ delta)
    es = alg.basis_elements()
    for n in range(n_max + 1):
        for r, s in product(es, es):
            lhs = powers[n].apply(alg.mul(r, s))
            rhs = alg.zero
            for k in range(n + 1):
                c = mi.multi_binom_in(base, (n,), (k,))
                if c:
                    term = alg.mul(powers[n - k].apply(r), powers[k].apply(s))
                    rhs = alg.add(rhs, alg.scale(c, term))
            if lhs != rhs:
                return False
    return True


class PiStructure:
    """Common surface of the two pi kinds."""

    kind: str
    algebra: Algebra

    def lookup(self, a, b) -> AddMap:
        raise NotImplementedError

    def support(self, a) -> list:
        raise NotImplementedError

    def apply(self, a, b, r):
        return self.lookup(a, b).apply(r)

    def range_elements(self, cap: int = DEFAULT_WEIGHT_CAP) -> list:
        m = self.monoid
        return m.elements() if m.is_finite else m.elements(cap)

    def scope(self, cap: int = DEFAULT_WEIGHT_CAP) -> str:
        return "exhaustive" if self.monoid.is_finite else f"verified up to weight {cap}"

    def invariance_maps(self, cap: int = DEFAULT_WEIGHT_CAP) -> list:
        """Distinct nonzero maps an invariant ideal must be stable under."""
        seen, out = set(), []
        E = self.range_elements(cap)
        for a in E:
            for b in E:
                m = self.lookup(a, b)
                if not m.is_zero() and m not in seen:
                    seen.add(m)
                    out.append(m)
        return out


class ExplicitPi(PiStructure):
    """Table of maps; unlisted pairs read as ``id`` on the diagonal and 0 elsewhere."""

    kind = "table"

    def __init__(self, algebra: Algebra, monoid, entries):
        self.algebra = algebra
        self.monoid = monoid
        self.entries = {}
        for (a, b), m in dict(entries).items():
            monoid._check(a, b)
            if m.dim != algebra.dim:
                raise DimensionMismatch(f"map for ({a!r}, {b!r}) has dimension {m.dim}")
            self.entries[(a, b)] = m
        self._id = AddMap.identity(algebra.base, algebra.dim)
        self._zero = AddMap.zero(algebra.base, algebra.dim)
        self._support = {}

    def lookup(self, a, b) -> AddMap:
        self.monoid._check(a, b)
        m = self.entries.get((a, b))
        if m is not None:
            return m
        return self._id if a == b else self._zero

    def support(self, a) -> list:
        s = self._support.get(a)
        if s is None:
            cands = {a} | {b for (x, b) in self.entries if x == a}
            s = sorted((b for b in cands if not self.lookup(a, b).is_zero()), key=self.monoid.sort_key)
            self._support[a] = s
        return s

    def with_entry(self, a, b, m: AddMap) -> "ExplicitPi":
        entries = dict(self.entries)
        entries[(a, b)] = m
        return ExplicitPi(self.algebra, self.monoid, entries)


class DeltaPi(PiStructure):
    """``pi^f_g = C(f, g) delta_1^(f-g)_1 o ... o delta_k^(f-g)_k`` on ``N^k``."""

    kind = "delta_generated"

    def __init__(self, family: DeltaFamily):
        self.family = family
        self.algebra = family.algebra
        self.monoid = FreeCommutativeMonoid(family.k)
        self._powers = {}
        self._cache = {}
        self._support = {}
        self._zero = AddMap.zero(self.algebra.base, self.algebra.dim)

    def delta_power(self, h) -> AddMap:
        """``delta^h`` composed in index order, ``delta_1`` outermost."""
        out = AddMap.identity(self.algebra.base, self.algebra.dim)
        for i, n in enumerate(h):
            if n:
                p = self._powers.get((i, n))
                if p is None:
                    p = self._powers[(i, n)] = self.family.deltas[i].power(n)
                out = out @ p
        return out

    def lookup(self, f, g) -> AddMap:
        key = (f, g)
        m = self._cache.get(key)
        if m is None:
            self.monoid._check(f, g)
            c = mi.multi_binom_in(self.algebra.base, f, g)
            if not c:
                m = self._zero
            else:
                m = self.delta_power(mi.mi_sub(f, g)).scale(c)
            self._cache[key] = m
        return m

    def support(self, f) -> list:
        s = self._support.get(f)
        if s is None:
            s = [g for g in mi.below(f) if not self.lookup(f, g).is_zero()]
            self._support[f] = s
        return s

    def materialize(self, cap: int = DEFAULT_WEIGHT_CAP) -> ExplicitPi:
        """Explicit table with every entry of weight ``<= cap`` (zeros included)."""
        E = self.range_elements(cap)
        return ExplicitPi(self.algebra, self.monoid, {(a, b): self.lookup(a, b) for a in E for b in E})


def pi_lookup(pi: PiStructure, a, b) -> AddMap:
    return pi.lookup(a, b)


# -- fixed subring ---------------------------------------------------------


def fixed_subring_by_equations(pi: PiStructure, cap: int = DEFAULT_WEIGHT_CAP) -> list:
    """Solve ``pi^a_b(r) = delta_ab r`` for all ``a, b`` in range."""
    alg = pi.algebra
    base = alg.base
    ident = AddMap.identity(base, alg.dim)
    rows = []
    E = pi.range_elements(cap)
    seen = set()
    for a in E:
        for b in E:
            m = pi.lookup(a, b)
            m = m - ident if a == b else m
            if m.is_zero() or m in seen:
                continue
            seen.add(m)
            rows.extend(r for r in m.rows if any(r))
    return nullspace(base, rows, alg.dim)


def fixed_subring(pi: PiStructure, cap: int = DEFAULT_WEIGHT_CAP) -> list:
    """Basis of ``R^G``; the joint kernel of the deltas for Delta-generated pi."""
    if isinstance(pi, DeltaPi):
        return r_delta(pi.family)
    return fixed_subring_by_equations(pi, cap)


# -- axiom checks ----------------------------------------------------------


@dataclass(frozen=True)
class AxiomStatus:
    name: str
    passed: bool
    witness: dict | None = None
    scope: str = "exhaustive"
    note: str = ""

    def to_json(self, monoid=None, base=None):
        w = None
        if self.witness is not None:
            w = {}
            for k, v in self.witness.items():
                if monoid is not None and k in ("a", "b", "c", "d"):
                    w[k] = monoid.fmt(v)
                elif base is not None and k == "t":
                    w[k] = [base.fmt(x) for x in v]
                else:
                    w[k] = v
        d = {"axiom": self.name, "status": "pass" if self.passed else "fail", "scope": self.scope}
        if w is not None:
            d["witness"] = w
        if self.note:
            d["note"] = self.note
        return d


def _pairs_for_d4(pi, cap):
    E = pi.range_elements(cap)
    if pi.monoid.is_finite:
        return [(a, b) for a in E for b in E]
    return [(a, b) for a in E for b in E if mi.weight(a) + mi.weight(b) <= cap]


def _d4_rhs(pi, a, b, c):
    alg = pi.algebra
    acc = AddMap.zero(alg.base, alg.dim)
    for d, e in pi.monoid.factorizations(c):
        m1 = pi.lookup(a, d)
        if m1.is_zero():
            continue
        m2 = pi.lookup(b, e)
        if m2.is_zero():
            continue
        acc = acc + (m1 @ m2)
    return acc


def _d5_rhs(pi, a, b, r, s):
    alg = pi.algebra
    acc = alg.zero
    for c in pi.support(a):
        m2 = pi.lookup(c, b)
        if m2.is_zero():
            continue
        acc = alg.add(acc, alg.mul(pi.lookup(a, c).apply(r), m2.apply(s)))
    return acc


def check_axiom(pi: PiStructure, which: str, cap: int = DEFAULT_WEIGHT_CAP, fixed=None) -> AxiomStatus:
    """Check one axiom; a failure carries the first witness in deterministic order."""
    alg = pi.algebra
    base = alg.base
    mon = pi.monoid
    E = pi.range_elements(cap)
    scope = pi.scope(cap)
    e = mon.identity
    ident = AddMap.identity(base, alg.dim)

    def fail(**w):
        return AxiomStatus(which, False, w, scope)

    if which == "D0":
        return AxiomStatus("D0", True, None, scope, "finite support holds by construction")
    if which == "D1":
        if pi.lookup(e, e) != ident:
            return fail(a=e, b=e)
        for a in E:
            if a != e and not pi.lookup(e, a).is_zero():
                return fail(a=e, b=a)
    elif which == "D2":
        for a in E:
            for b in E:
                want = alg.unit if a == b else alg.zero
                if pi.lookup(a, b).apply(alg.unit) != want:
                    return fail(a=a, b=b)
    elif which == "D3":
        es = alg.basis_elements()
        for a in E:
            for b in E:
                m = pi.lookup(a, b)
                for i, j in product(range(alg.dim), repeat=2):
                    if m.apply(alg.add(es[i], es[j])) != alg.add(m.apply(es[i]), m.apply(es[j])):
                        return fail(a=a, b=b, r=i, s=j)
    elif which == "D4":
        for a, b in _pairs_for_d4(pi, cap):
            ab = mon.op(a, b)
            for c in E:
                if pi.lookup(ab, c) != _d4_rhs(pi, a, b, c):
                    return fail(a=a, b=b, c=c)
    elif which == "D5":
        es = alg.basis_elements()
        for a in E:
            for b in E:
                lhs_map = pi.lookup(a, b)
                for i, j in product(range(alg.dim), repeat=2):
                    lhs = lhs_map.apply(alg.mul(es[i], es[j]))
                    if lhs != _d5_rhs(pi, a, b, es[i], es[j]):
                        return fail(a=a, b=b, r=i, s=j)
    elif which == "D6":
        for a in E:
            if pi.lookup(a, a) != ident:
                return fail(a=a, b=a)
    elif which in ("D7", "D8"):
        side = "left" if which == "D7" else "right"
        fixed = fixed if fixed is not None else fixed_subring(pi, cap)
        done = set()
        for a in E:
            for b in E:
                m = pi.lookup(a, b)
                if m in done:
                    continue
                done.add(m)
                bad = _is_linear_over(alg, m, fixed, side)
                if bad is not None:
                    return fail(a=a, b=b, t=list(fixed[bad[0]]), r=bad[1])
    else:
        raise ValueError(f"unknown axiom {which!r}")
    return AxiomStatus(which, True, None, scope)


def check_commutative(pi: PiStructure, cap: int = DEFAULT_WEIGHT_CAP) -> AxiomStatus:
    """All ``pi^a_b`` pairwise commute (checked over distinct nonzero maps)."""
    E = pi.range_elements(cap)
    where = {}
    for a in E:
        for b in E:
            m = pi.lookup(a, b)
            if not m.is_zero() and m not in where:
                where[m] = (a, b)
    maps = list(where)
    for i, m1 in enumerate(maps):
        for m2 in maps[i + 1:]:
            if m1 @ m2 != m2 @ m1:
                (a, b), (c, d) = where[m1], where[m2]
                return AxiomStatus("commutative", False, {"a": a, "b": b, "c": c, "d": d}, pi.scope(cap))
    return AxiomStatus("commutative", True, None, pi.scope(cap))


def check_well_ordered(pi: PiStructure, cap: int = DEFAULT_WEIGHT_CAP) -> AxiomStatus:
    """``pi^a_b = 0`` whenever ``a`` strictly precedes ``b`` in the monoid order."""
    E = pi.range_elements(cap)
    for a in E:
        for b in E:
            if pi.monoid.cmp(a, b) < 0 and not pi.lookup(a, b).is_zero():
                return AxiomStatus("well_ordered", False, {"a": a, "b": b}, pi.scope(cap))
    return AxiomStatus("well_ordered", True, None, pi.scope(cap))


def verify_witness(pi: PiStructure, status: AxiomStatus, cap: int = DEFAULT_WEIGHT_CAP) -> bool:
    """Re-evaluate a failure at its witness alone; True iff it really fails there."""
    w = status.witness
    alg = pi.algebra
    ident = AddMap.identity(alg.base, alg.dim)
    name = status.name
    if name == "D1":
        m = pi.lookup(w["a"], w["b"])
        return m != ident if w["a"] == w["b"] else not m.is_zero()
    if name == "D2":
        want = alg.unit if w["a"] == w["b"] else alg.zero
        return pi.lookup(w["a"], w["b"]).apply(alg.unit) != want
    if name == "D3":
        m = pi.lookup(w["a"], w["b"])
        r, s = alg.basis(w["r"]), alg.basis(w["s"])
        return m.apply(alg.add(r, s)) != alg.add(m.apply(r), m.apply(s))
    if name == "D4":
        a, b, c = w["a"], w["b"], w["c"]
        return pi.lookup(pi.monoid.op(a, b), c) != _d4_rhs(pi, a, b, c)
    if name == "D5":
        r, s = alg.basis(w["r"]), alg.basis(w["s"])
        return pi.lookup(w["a"], w["b"]).apply(alg.mul(r, s)) != _d5_rhs(pi, w["a"], w["b"], r, s)
    if name == "D6":
        return pi.lookup(w["a"], w["a"]) != ident
    if name in ("D7", "D8"):
        m = pi.lookup(w["a"], w["b"])
        t, r = tuple(w["t"]), alg.basis(w["r"])
        if name == "D7":
            return m.apply(alg.mul(t, r)) != alg.mul(t, m.apply(r))
        return m.apply(alg.mul(r, t)) != alg.mul(m.apply(r), t)
    if name == "commutative":
        m1, m2 = pi.lookup(w["a"], w["b"]), pi.lookup(w["c"], w["d"])
        return m1 @ m2 != m2 @ m1
    if name == "well_ordered":
        return pi.monoid.cmp(w["a"], w["b"]) < 0 and not pi.lookup(w["a"], w["b"]).is_zero()
    raise ValueError(f"unknown axiom {name!r}")


@dataclass(frozen=True)
class AxiomReport:
    statuses: dict
    cap: int | None
    fixed_subring: tuple = field(default=())
    base: object = None

    def __getitem__(self, name) -> AxiomStatus:
        return self.statuses[name]

    def passed(self, *names) -> bool:
        return all(self.statuses[n].passed for n in names)

    def failures(self) -> list:
        return [s for s in self.statuses.values() if not s.passed]

    def to_json(self, monoid=None):
        return {
            "cap": self.cap,
            "axioms": [s.to_json(monoid, self.base) for s in self.statuses.values()],
            "fixed_subring_basis": [[self.base.fmt(x) for x in v] for v in self.fixed_subring],
        }


def check_all(pi: PiStructure, cap: int = DEFAULT_WEIGHT_CAP, names=AXIOMS) -> AxiomReport:
    fixed = fixed_subring(pi, cap)
    st = {n: check_axiom(pi, n, cap, fixed=fixed) for n in names}
    st["commutative"] = check_commutative(pi, cap)
    st["well_ordered"] = check_well_ordered(pi, cap)
    return AxiomReport(st, None if pi.monoid.is_finite else cap, tuple(fixed), pi.algebra.base)


@dataclass(frozen=True)
class Classification:
    g_derivation: bool
    unital: bool
    strong_left: bool
    strong_right: bool
    d_structure: bool
    commutative: bool
    well_ordered: bool
    scope: str

    @property
    def strong(self) -> bool:
        return self.strong_left or self.strong_right

    def to_json(self):
        return {
            "g_derivation": self.g_derivation,
            "unital": self.unital,
            "strong": self.strong,
            "strong_left": self.strong_left,
            "strong_right": self.strong_right,
            "d_structure": self.d_structure,
            "commutative": self.commutative,
            "well_ordered": self.well_ordered,
            "scope": self.scope,
        }


def classification_from_report(rep: AxiomReport, scope: str) -> Classification:
    gd = rep.passed("D0", "D1", "D2", "D3", "D4")
    return Classification(
        g_derivation=gd,
        unital=gd and rep.passed("D6"),
        strong_left=gd and rep.passed("D7"),
        strong_right=gd and rep.passed("D8"),
        d_structure=gd and rep.passed("D5"),
        commutative=rep.passed("commutative"),
        well_ordered=rep.passed("well_ordered"),
        scope=scope,
    )


def classify(pi: PiStructure, cap: int = DEFAULT_WEIGHT_CAP) -> Classification:
    return classification_from_report(check_all(pi, cap), pi.scope(cap))
