"""Invariant ideals and simplicity deciders.

The deciders come in three flavours: brute-force closure over a finite
``S``, criteria that reduce simplicity of ``S`` to facts about ``R`` and
the centre, and a bounded search for a unit inside a principal ideal.
Every negative verdict carries evidence that can be re-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import sympy

from . import multiindex as mi
from .coeffring import DEFAULT_ORBIT_BOUND, AddMap, Algebra, is_derivation
from .coeffring import center as algebra_center
from .errors import (
    HypothesesNotMet,
    TooLarge,
    UnsupportedBase,
    WrongCharacteristic,
    WrongPiKind,
)
from .linalg import Subspace, express, nullspace, solve
from .orering import (
    OreElem,
    OreRing,
    center,
    degree,
    fmt_elem,
    s_commutator,
    s_mul,
    s_scale,
    zsg,
)
from .pistructure import (
    DeltaFamily,
    DeltaPi,
    is_delta_commutative,
    is_kernel_derivation_family,
    r_delta,
)

DEFAULT_BRUTE_FORCE_CAP = 2 ** 20
DEFAULT_WITNESS_CAP = 8


def _need_field(base):
    if not base.is_field:
        raise UnsupportedBase(f"{base.tag} is not a field")


def _fmt_vec(base, v) -> list:
    return [base.fmt(c) for c in v]


# -- ideals --------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    ambient: Algebra
    basis: tuple
    g_invariant: bool = False

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_proper(self) -> bool:
        return len(self.basis) < self.ambient.dim

    def contains(self, v) -> bool:
        return Subspace(self.ambient.base, self.ambient.dim, self.basis).contains(v)


def ideal_closure(alg: Algebra, generators, maps=()) -> Ideal:
    """Smallest two-sided ideal containing ``generators`` and stable under ``maps``."""
    _need_field(alg.base)
    sp = Subspace(alg.base, alg.dim)
    work = [tuple(g) for g in generators if sp.add(g)]
    es = alg.basis_elements()
    while work:
        v = work.pop()
        imgs = [alg.mul(e, v) for e in es] + [alg.mul(v, e) for e in es] + [m.apply(v) for m in maps]
        for w in imgs:
            if sp.add(w):
                work.append(w)
                if sp.is_full():
                    return Ideal(alg, sp.basis, bool(maps))
    return Ideal(alg, sp.basis, bool(maps))


def is_invariant_ideal(alg: Algebra, basis, maps=()) -> bool:
    """Re-check closedness of ``span(basis)`` under multiplication and ``maps``."""
    sp = Subspace(alg.base, alg.dim, basis)
    es = alg.basis_elements()
    for v in sp.basis:
        for e in es:
            if not sp.contains(alg.mul(e, v)) or not sp.contains(alg.mul(v, e)):
                return False
        if any(not sp.contains(m.apply(v)) for m in maps):
            return False
    return True


def projective_points(base, dim: int):
    """Nonzero vectors whose first nonzero coordinate is 1 (finite base)."""
    elems = list(base.elements())
    for lead in range(dim):
        for tail in product(elems, repeat=dim - lead - 1):
            yield (base.zero,) * lead + (base.one,) + tail


# -- G-simplicity of the coefficient algebra -------------------------------------


@dataclass(frozen=True)
class GSimpleResult:
    verdict: str
    method: str
    witness: tuple | None = None

    @property
    def simple(self):
        return {"simple": True, "not_simple": False}.get(self.verdict)

    def to_json(self, base):
        d = {"verdict": self.verdict, "method": self.method}
        if self.witness is not None:
            d["ideal_basis"] = [_fmt_vec(base, v) for v in self.witness]
        return d


def nilradical(alg: Algebra) -> list | None:
    """Basis of the nilradical of a commutative associative algebra, else None."""
    if not (alg.is_commutative and alg.is_associative):
        return None
    base = alg.base
    p = base.characteristic
    if p:
        if not base.is_field:
            return None
        q = p
        while q < alg.dim:
            q *= p
        # Frobenius x -> x^q is additive and F_p-linear here
        def frob(r):
            out = alg.unit
            for _ in range(q):
                out = alg.mul(out, r)
            return out
        m = AddMap.from_function(alg, frob)
        return m.kernel()
    rows = []
    es = alg.basis_elements()
    # x is nilpotent iff Tr(L_{x e_j}) = 0 for all j (characteristic 0)
    for ej in es:
        row = []
        for ei in es:
            lm = alg.left_mult(alg.mul(ei, ej))
            tr = base.zero
            for k in range(alg.dim):
                tr = base.add(tr, lm.rows[k][k])
            row.append(tr)
        rows.append(row)
    return nullspace(base, rows, alg.dim)


def local_socle(alg: Algebra):
    """Socle of a local algebra with residue field the base, when it is a line."""
    nil = nilradical(alg)
    if nil is None or len(nil) != alg.dim - 1:
        return None
    conds = [lambda r, n=n: alg.mul(r, n) for n in nil]
    es = alg.basis_elements()
    rows = []
    for f in conds:
        imgs = [f(e) for e in es]
        rows += [[img[k] for img in imgs] for k in range(alg.dim)]
    soc = nullspace(alg.base, rows, alg.dim)
    return soc if len(soc) == 1 else None


def is_g_simple_coeffring(alg: Algebra, maps) -> GSimpleResult:
    """Decide whether ``R`` has no nonzero proper ideal stable under ``maps``."""
    _need_field(alg.base)
    maps = list(maps)
    es = alg.basis_elements()
    probes = list(es) + [alg.add(es[i], es[j]) for i in range(alg.dim) for j in range(i + 1, alg.dim)]
    for v in probes:
        I = ideal_closure(alg, [v], maps)
        if I.is_proper():
            return GSimpleResult("not_simple", "closure_search", I.basis)
    soc = local_socle(alg)
    if soc is not None:
        I = ideal_closure(alg, soc, maps)
        if I.is_proper():
            return GSimpleResult("not_simple", "local_socle", I.basis)
        return GSimpleResult("simple", "local_socle")
    if alg.base.is_finite:
        for v in projective_points(alg.base, alg.dim):
            I = ideal_closure(alg, [v], maps)
            if I.is_proper():
                return GSimpleResult("not_simple", "exhaustive", I.basis)
        return GSimpleResult("simple", "exhaustive")
    return GSimpleResult("unknown", "closure_search")


# -- inner derivations -----------------------------------------------------------


def is_inner_from(alg: Algebra, target: AddMap, domain) -> tuple | None:
    """Some ``c`` in ``span(domain)`` with ``target(r) = c r - r c`` on the basis, or None."""
    domain = list(domain)
    es = alg.basis_elements()
    if not domain:
        return alg.zero if target.is_zero() else None
    rows, rhs = [], []
    cols = [[alg.commutator(d, e) for d in domain] for e in es]
    for j, e in enumerate(es):
        t = target.apply(e)
        for k in range(alg.dim):
            rows.append([cols[j][n][k] for n in range(len(domain))])
            rhs.append(t[k])
    lam = solve(alg.base, rows, rhs, len(domain))
    if lam is None:
        return None
    out = alg.zero
    for c, d in zip(lam, domain):
        out = alg.add(out, alg.scale(c, d))
    return out


# -- reports ----------------------------------------------------------------------


@dataclass
class SimplicityReport:
    verdict: str
    method: str
    hypotheses: list = field(default_factory=list)
    evidence: dict = field(default_factory=dict)
    caps: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "verdict": self.verdict,
            "method": self.method,
            "hypotheses": self.hypotheses,
            "evidence": self.evidence,
            "caps": self.caps,
        }


def _hyp(name, ok, note=None):
    d = {"name": name, "holds": bool(ok)}
    if note:
        d["note"] = note
    return d


# -- F = Z(R)_Delta -----------------------------------------------------------------


def _min_poly(alg: Algebra, basis, x):
    """Minimal polynomial of ``x`` inside the subalgebra spanned by ``basis`` (over Q)."""
    t = sympy.Symbol("t")
    powers = [alg.unit]
    while True:
        nxt = alg.mul(powers[-1], x)
        coeffs = express(alg.base, powers, nxt)
        if coeffs is not None:
            poly = t ** len(powers) - sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(coeffs))
            return sympy.Poly(poly, t, domain="QQ")
        powers.append(nxt)
        if len(powers) > len(basis):
            return None


def field_check(alg: Algebra, basis) -> bool | None:
    """Is ``span(basis)`` (a commutative associative subalgebra with 1) a field?"""
    basis = list(basis)
    if len(basis) == 1:
        return True
    base = alg.base
    if base.is_finite:
        sp = Subspace(base, alg.dim, basis)
        for coeffs in product(list(base.elements()), repeat=len(basis)):
            if not any(coeffs):
                continue
            z = alg.zero
            for c, b in zip(coeffs, basis):
                z = alg.add(z, alg.scale(c, b))
            w = _inverse_in(alg, basis, z)
            if w is None or not sp.contains(w):
                return False
        return True
    for cand in [basis[i] for i in range(1, len(basis))] + [
        tuple(sum((b[k] * (i + 1) ** j for j, b in enumerate(basis)), base.zero) for k in range(alg.dim))
        for i in range(3)
    ]:
        mp = _min_poly(alg, basis, cand)
        if mp is not None and mp.degree() == len(basis):
            return bool(mp.is_irreducible)
    return None


def _inverse_in(alg: Algebra, basis, z):
    rows = []
    cols = [alg.mul(z, b) for b in basis]
    for k in range(alg.dim):
        rows.append([c[k] for c in cols])
    lam = solve(alg.base, rows, list(alg.unit), len(basis))
    if lam is None:
        return None
    w = alg.zero
    for c, b in zip(lam, basis):
        w = alg.add(w, alg.scale(c, b))
    return w if alg.mul(w, z) == alg.unit else None


def z_delta(family: DeltaFamily) -> list:
    """Basis of ``F = Z(R)_Delta``."""
    alg = family.algebra
    rd = r_delta(family)
    z = algebra_center(alg)
    return list(Subspace(alg.base, alg.dim, z).intersect(Subspace(alg.base, alg.dim, rd)).basis)


# -- the Delta-generated deciders --------------------------------------------------


def _delta_preamble(family: DeltaFamily, want_char: str):
    alg = family.algebra
    base = alg.base
    _need_field(base)
    p = base.characteristic
    if want_char == "0" and p != 0:
        raise WrongCharacteristic(f"characteristic {p}, expected 0")
    if want_char == "p" and p == 0:
        raise WrongCharacteristic("characteristic 0, expected a prime")
    hyps = [
        _hyp("delta_commutative", is_delta_commutative(family)),
        _hyp("left_kernel_derivations", is_kernel_derivation_family(family, "left")),
        _hyp("right_kernel_derivations", is_kernel_derivation_family(family, "right")),
        _hyp("leibniz", all(is_derivation(alg, d) for d in family.deltas)),
    ]
    F = z_delta(family)
    fc = field_check(alg, F)
    hyps.append(_hyp("F_is_field", fc is True, None if fc is not None else "undetermined"))
    if not hyps[0]["holds"]:
        raise HypothesesNotMet(["delta_commutative"])
    return hyps, F


def _combination_kernel(alg: Algebra, maps, F, rd):
    """Kernel of ``(lambda, mu) -> sum lambda_(m,l) f_l m - delta_(sum mu_t t_t)``."""
    base = alg.base
    es = alg.basis_elements()
    cols = []
    for m in maps:
        for f in F:
            cols.append([alg.mul(f, m.apply(e)) for e in es])
    n_lam = len(cols)
    for t in rd:
        cols.append([alg.neg(alg.commutator(t, e)) for e in es])
    rows = []
    for j in range(alg.dim):
        for k in range(alg.dim):
            rows.append([col[j][k] for col in cols])
    return nullspace(base, rows, len(cols)), n_lam


def _combination_witness(alg, labels, maps, F, rd):
    ker, n_lam = _combination_kernel(alg, maps, F, rd)
    for v in ker:
        if any(v[:n_lam]):
            coeffs = []
            for n, (lab, _m) in enumerate(zip(labels, maps)):
                c = alg.zero
                for l, f in enumerate(F):
                    c = alg.add(c, alg.scale(v[n * len(F) + l], f))
                coeffs.append((lab, c))
            cc = alg.zero
            for mu, t in zip(v[n_lam:], rd):
                cc = alg.add(cc, alg.scale(mu, t))
            return coeffs, cc
    return None


def central_witness(ring: OreRing, coeffs, c) -> OreElem:
    """``sum c_lab x^lab - c`` for labels that are exponents of the ring."""
    out = s_scale(-1, ring.const(c))
    for exp, r in coeffs:
        out = out + ring.monomial(r, exp)
    return out


def is_central_against_generators(ring: OreRing, u: OreElem) -> bool:
    alg = ring.algebra
    ts = [ring.const(e) for e in alg.basis_elements()] + [ring.x(g) for g in ring.monoid.generators()]
    return all(not s_commutator(u, t) for t in ts)


def _delta_decision(family, hyps, F, labels, maps, method, extra_caps):
    alg = family.algebra
    base = alg.base
    rs = is_g_simple_coeffring(alg, family.deltas)
    evidence = {"delta_simple": rs.to_json(base), "F_basis": [_fmt_vec(base, v) for v in F]}
    if rs.verdict == "not_simple":
        return SimplicityReport("not_simple", method, hyps, evidence, extra_caps)
    if not next(h for h in hyps if h["name"] == "F_is_field")["holds"]:
        raise HypothesesNotMet(["F_is_field"])
    rd = r_delta(family)
    wit = _combination_witness(alg, labels, maps, F, rd)
    if wit is None:
        evidence["inner_combination"] = None
        verdict = "simple" if rs.verdict == "simple" else "unknown"
        return SimplicityReport(verdict, method, hyps, evidence, extra_caps)
    coeffs, c = wit
    ring = OreRing(alg, DeltaPi(family).monoid, DeltaPi(family))
    z = central_witness(ring, coeffs, c)
    evidence["inner_combination"] = {
        "coefficients": [{"exp": mi.fmt(e), "coef": _fmt_vec(base, r)} for e, r in coeffs],
        "c": _fmt_vec(base, c),
        "central_element": fmt_elem(z),
        "central_verified": is_central_against_generators(ring, z),
    }
    return SimplicityReport("not_simple", method, hyps, evidence, extra_caps)


def decide_simple_char0(family: DeltaFamily) -> SimplicityReport:
    """Characteristic 0: simple iff R is Delta-simple and no nontrivial F-combination of Delta is inner."""
    hyps, F = _delta_preamble(family, "0")
    k = family.k
    labels = [mi.unit_index(k, i) for i in range(k)]
    return _delta_decision(family, hyps, F, labels, list(family.deltas), "theorem_4_13", {})


def p_power_maps(delta: AddMap, p: int, bound: int = DEFAULT_ORBIT_BOUND) -> list:
    """``[(j, delta^(p^j))]`` for ``j = 0, 1, ...`` up to and including the first repeat."""
    out = []
    seen = set()
    m = delta
    j = 0
    while True:
        out.append((j, m))
        if m in seen:
            return out
        seen.add(m)
        if j >= bound:
            return out
        m = m.power(p)
        j += 1


def decide_simple_charp(family: DeltaFamily, orbit_bound: int = DEFAULT_ORBIT_BOUND) -> SimplicityReport:
    """Characteristic p: the same test over the maps ``delta_i^(p^j)``."""
    hyps, F = _delta_preamble(family, "p")
    p = family.algebra.characteristic
    k = family.k
    labels, maps = [], []
    for i, d in enumerate(family.deltas):
        for j, m in p_power_maps(d, p, orbit_bound):
            labels.append(mi.unit_index(k, i, p ** j))
            maps.append(m)
    rep = _delta_decision(family, hyps, F, labels, maps, "theorem_4_15", {"orbit_bound": orbit_bound})
    rep.evidence["p_power_exponents"] = [mi.fmt(e) for e in labels]
    return rep


# -- criteria over a general ring -----------------------------------------------------


def theorem_3_3_hypotheses(ring: OreRing) -> list:
    c = ring.classification
    return [
        _hyp("unital_g_derivation", c.unital),
        _hyp("g_commutative", True),
        _hyp("strong", c.strong),
        _hyp("well_ordered", c.well_ordered),
        _hyp("d8_or_d7_and_commutative", c.strong_right or (c.strong_left and c.commutative)),
    ]


def decide_via_theorem_3_3(ring: OreRing, orbit_bound: int = DEFAULT_ORBIT_BOUND) -> SimplicityReport:
    """G-simple iff R is G-simple and ``Z(S)^G`` is a field."""
    hyps = theorem_3_3_hypotheses(ring)
    missing = [h["name"] for h in hyps if not h["holds"]]
    if missing:
        raise HypothesesNotMet(missing)
    if isinstance(ring.pi, DeltaPi):
        fam = ring.pi.family
        rep = decide_simple_char0(fam) if ring.base.characteristic == 0 else decide_simple_charp(fam, orbit_bound)
        rep.hypotheses = hyps + rep.hypotheses
        return rep
    if not ring.is_finite:
        raise HypothesesNotMet(["finite S"])
    alg, base = ring.algebra, ring.base
    _need_field(base)
    rg = is_g_simple_coeffring(alg, ring.pi.invariance_maps(ring.cap))
    Z = zsg(ring)
    zflat = [ring.flatten(z) for z in Z]
    is_field = field_check(ring.as_algebra, zflat) if zflat else False
    evidence = {
        "r_g_simple": rg.to_json(base),
        "zsg_basis": [fmt_elem(z) for z in Z],
        "zsg_is_field": is_field,
    }
    if rg.verdict == "unknown":
        verdict = "unknown"
    else:
        verdict = "simple" if rg.simple and is_field else "not_simple"
    return SimplicityReport(verdict, "theorem_3_3", hyps, evidence, {})


def decide_brute_force(ring: OreRing, size_cap: int = DEFAULT_BRUTE_FORCE_CAP) -> SimplicityReport:
    """Exhaustive closure over every projective point of a finite S."""
    if not ring.is_finite:
        raise HypothesesNotMet(["finite S"])
    _need_field(ring.base)
    flat = ring.as_algebra
    size = ring.base.order() ** flat.dim
    if size > size_cap:
        raise TooLarge(f"S has {size} elements, cap is {size_cap}")
    E = ring.monoid.elements()
    maps = list(dict.fromkeys(ring.tilde_map(a, b) for a in E for b in E))
    maps = [m for m in maps if not m.is_zero()]
    plain = g_inv = None
    for v in projective_points(ring.base, flat.dim):
        if plain is None:
            I = ideal_closure(flat, [v])
            if I.is_proper():
                plain = I
        if g_inv is None:
            J = ideal_closure(flat, [v], maps)
            if J.is_proper():
                g_inv = J
        if plain is not None and g_inv is not None:
            break

    def ideal_json(I):
        return None if I is None else [fmt_elem(ring.unflatten(b)) for b in I.basis]

    evidence = {
        "elements": size,
        "simple": plain is None,
        "g_simple": g_inv is None,
        "proper_ideal": ideal_json(plain),
        "proper_invariant_ideal": ideal_json(g_inv),
    }
    verdict = "simple" if plain is None else "not_simple"
    return SimplicityReport(verdict, "brute_force", [_hyp("finite S", True)], evidence, {"brute_force_cap": size_cap})


# -- bounded searches --------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessResult:
    found: bool
    cap: int
    dimension: int

    @property
    def status(self) -> str:
        return "found" if self.found else "not_found_within_cap"

    def to_json(self):
        return {"status": self.status, "cap": self.cap, "explored_dimension": self.dimension}


def witness_unit_in_ideal(ring: OreRing, s: OreElem, cap: int = DEFAULT_WITNESS_CAP) -> WitnessResult:
    """Search the two-sided ideal ``(s)`` for ``1`` using only elements of weight ``<= cap``."""
    _need_field(ring.base)
    if not s:
        raise ValueError("the zero element generates the zero ideal")
    alg = ring.algebra
    exps = ring.exponents(cap)
    index = {(a, i): n for n, (a, i) in enumerate((a, i) for a in exps for i in range(alg.dim))}
    dim = len(index)

    def vec(u):
        v = [ring.base.zero] * dim
        for a, r in u.terms:
            if a not in exps_set:
                return None
            for i, c in enumerate(r):
                v[index[(a, i)]] = c
        return v

    exps_set = set(exps)
    one = vec(ring.one)
    sp = Subspace(ring.base, dim)
    v0 = vec(s)
    if v0 is None:
        return WitnessResult(False, cap, 0)
    sp.add(v0)
    if sp.contains(one):
        return WitnessResult(True, cap, sp.rank)
    monos = ring.monomial_basis(cap)
    work = [s]
    while work:
        u = work.pop()
        for t in monos:
            for w in (s_mul(t, u), s_mul(u, t)):
                v = vec(w)
                if v is not None and sp.add(v):
                    work.append(w)
                    if sp.contains(one):
                        return WitnessResult(True, cap, sp.rank)
    return WitnessResult(False, cap, sp.rank)


@dataclass
class CenterSearch:
    element: OreElem | None
    anomalies: list
    cap: int
    center_dimension: int

    def to_json(self):
        return {
            "element": None if self.element is None else fmt_elem(self.element),
            "degree": None if self.element is None else self.element.ring.monoid.fmt(degree(self.element)),
            "anomalies": self.anomalies,
            "cap": self.cap,
            "center_dimension": self.center_dimension,
        }


def least_central_monic(ring: OreRing, basis: list, cap: int) -> OreElem | None:
    """Least-degree non-constant monic element of ``span(basis)``."""
    alg, mon = ring.algebra, ring.monoid
    base = ring.base
    exps = ring.exponents(cap)
    n = len(basis)
    if not n:
        return None
    for f in exps:
        if f == mon.identity:
            continue
        higher = [a for a in exps if mon.cmp(a, f) > 0]
        rows, rhs = [], []
        for a in higher:
            for i in range(alg.dim):
                rows.append([b.coeff(a)[i] for b in basis])
                rhs.append(base.zero)
        for i in range(alg.dim):
            rows.append([b.coeff(f)[i] for b in basis])
            rhs.append(alg.unit[i])
        lam = solve(base, rows, rhs, n)
        if lam is not None:
            out = ring.zero
            for c, b in zip(lam, basis):
                if c:
                    out = out + s_scale(c, b)
            return out
    return None


def shape_anomalies(ring: OreRing, z: OreElem) -> list:
    p = ring.base.characteristic
    out = []
    for a in z.support():
        if a == ring.monoid.identity:
            continue
        sup = mi.support(a)
        if p == 0:
            if mi.weight(a) != 1:
                out.append(f"term x^{mi.fmt(a)} is not linear")
        else:
            if len(sup) != 1 or not mi.is_prime_power_exponent(a[sup[0]], p):
                out.append(f"term x^{mi.fmt(a)} is not a p-power of one variable")
    return out


def center_structure_search(ring: OreRing, cap: int | None = None) -> CenterSearch:
    """Least non-constant monic central element within ``cap`` and its shape anomalies."""
    if not isinstance(ring.pi, DeltaPi):
        raise WrongPiKind("center structure search needs a Delta-generated ring")
    cap = ring.cap if cap is None else cap
    Z = center(ring, cap)
    z = least_central_monic(ring, Z, cap)
    anomalies = [] if z is None else shape_anomalies(ring, z)
    return CenterSearch(z, anomalies, cap, len(Z))


# -- dispatch -------------------------------------------------------------------------


class VerdictDisagreement(RuntimeError):
    pass


def decide(ring: OreRing, strategy: str = "auto", caps=None) -> SimplicityReport:
    """Run one strategy; ``auto`` prefers brute force, then the criteria, then the search."""
    caps = dict(caps or {})
    bf_cap = caps.get("brute_force_cap", DEFAULT_BRUTE_FORCE_CAP)
    ob = caps.get("orbit_bound", DEFAULT_ORBIT_BOUND)
    wcap = caps.get("witness_cap", DEFAULT_WITNESS_CAP)
    if strategy == "brute":
        rep = decide_brute_force(ring, bf_cap)
    elif strategy == "theorem":
        rep = decide_via_theorem_3_3(ring, ob)
    elif strategy == "witness":
        rep = witness_strategy(ring, wcap)
    elif strategy == "auto":
        if ring.is_finite:
            rep = decide_brute_force(ring, bf_cap)
            try:
                th = decide_via_theorem_3_3(ring, ob)
            except HypothesesNotMet:
                th = None
            if th is not None:
                g = "simple" if rep.evidence["g_simple"] else "not_simple"
                if th.verdict != "unknown" and th.verdict != g:
                    raise VerdictDisagreement(f"brute force says {g}, criterion says {th.verdict}")
                rep.evidence["theorem_3_3"] = th.verdict
        else:
            try:
                rep = decide_via_theorem_3_3(ring, ob)
            except HypothesesNotMet:
                rep = witness_strategy(ring, wcap)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    rep.caps = {**caps, **rep.caps}
    return rep


def witness_strategy(ring: OreRing, cap: int = DEFAULT_WITNESS_CAP) -> SimplicityReport:
    """Bounded unit search from each basis constant; never concludes "simple"."""
    alg = ring.algebra
    log = []
    for i, e in enumerate(alg.basis_elements()):
        r = witness_unit_in_ideal(ring, ring.const(e), cap)
        log.append({"generator": fmt_elem(ring.const(e)), **r.to_json()})
    evidence = {"unit_witnesses": log}
    if isinstance(ring.pi, DeltaPi):
        evidence["center_search"] = center_structure_search(ring, min(cap, ring.cap)).to_json()
    return SimplicityReport("unknown", "witness_search", [], evidence, {"witness_cap": cap})
