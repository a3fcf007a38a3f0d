import pytest

from conftest import d_dy, matrix_algebra, truncated
from orelab import fixtures
from orelab.coeffring import AddMap
from orelab.errors import DimensionMismatch
from orelab.pistructure import (
    AXIOMS,
    DeltaFamily,
    DeltaPi,
    ExplicitPi,
    check_all,
    check_axiom,
    classify,
    fixed_subring,
    fixed_subring_by_equations,
    is_delta_commutative,
    is_kernel_derivation_family,
    leibniz_power_check,
    pi_lookup,
    r_delta,
    verify_witness,
)
from orelab.scalars import QQ, PrimeField


def y_times_d(alg, power=1):
    """``y^power * d/dy`` on a truncated polynomial ring."""
    n = alg.dim
    rows = [[0] * n for _ in range(n)]
    for j in range(1, n):
        if j - 1 + power < n:
            rows[j - 1 + power][j] = j
    return AddMap(alg.base, rows)


def inner(alg, a):
    return alg.left_mult(a) - alg.right_mult(a)


@pytest.fixture
def q_pi():
    alg = truncated(QQ, 3)
    return DeltaPi(DeltaFamily(alg, [d_dy(alg)]))


def test_lookup_formula(q_pi):
    d = d_dy(q_pi.algebra)
    assert pi_lookup(q_pi, (2,), (1,)) == d.scale(2)
    for f in [(0,), (1,), (3,)]:
        assert q_pi.lookup(f, f) == AddMap.identity(QQ, 3)
    assert q_pi.lookup((1,), (2,)).is_zero()


def test_lookup_incomparable_is_zero():
    pi = fixtures.load("f3_uv").pi
    assert pi.lookup((1, 0), (0, 1)).is_zero()
    assert not pi.lookup((1, 1), (0, 1)).is_zero()


def test_family_rejects_bad_maps():
    alg = truncated(QQ, 3)
    with pytest.raises(ValueError):
        DeltaFamily(alg, [AddMap.identity(QQ, 3)])
    with pytest.raises(DimensionMismatch):
        DeltaFamily(alg, [AddMap.zero(QQ, 2)])


def test_twisted_f2_axioms(twisted_f2):
    rep = check_all(twisted_f2.pi)
    assert rep.passed("D0", "D1", "D2", "D3", "D4", "D6", "D7", "D8")
    d5 = rep["D5"]
    assert not d5.passed
    g, zero = twisted_f2.monoid.parse("g"), twisted_f2.monoid.parse("0")
    assert d5.witness == {"a": g, "b": zero, "r": 0, "s": 0}
    assert verify_witness(twisted_f2.pi, d5)
    assert rep.fixed_subring == ((1, 1),)


def test_twisted_f2_classification(twisted_f2):
    c = classify(twisted_f2.pi)
    assert c.g_derivation and c.unital and c.strong_left and c.strong_right
    assert c.commutative and c.well_ordered
    assert not c.d_structure
    assert c.scope == "exhaustive"


def test_delta_pi_f5_passes_through_d6():
    pi = fixtures.load("f5_trunc_5").pi
    rep = check_all(pi, 4)
    assert rep.passed("D0", "D1", "D2", "D3", "D4", "D5", "D6")
    assert rep["D4"].scope == "verified up to weight 4"
    assert classify(pi, 4).d_structure


def test_non_commuting_deltas_fail_d4():
    alg = matrix_algebra(PrimeField(3))
    E12, E21 = alg.basis(1), alg.basis(2)
    fam = DeltaFamily(alg, [inner(alg, E12), inner(alg, E21)])
    assert not is_delta_commutative(fam)
    st = check_axiom(DeltaPi(fam), "D4", 2)
    assert not st.passed
    assert set(st.witness) == {"a", "b", "c"}
    assert verify_witness(DeltaPi(fam), st, 2)


def test_every_axiom_has_a_status(twisted_f2):
    rep = check_all(twisted_f2.pi)
    assert all(n in rep.statuses for n in AXIOMS + ("commutative", "well_ordered"))
    assert all(verify_witness(twisted_f2.pi, s) for s in rep.failures())


def test_corrupted_diagonal_breaks_unitality(twisted_f2):
    pi = twisted_f2.pi
    g = twisted_f2.monoid.parse("g")
    bad = pi.with_entry(g, g, AddMap.zero(pi.algebra.base, 2))
    st = check_axiom(bad, "D6")
    assert not st.passed and verify_witness(bad, st)


def test_fixed_subrings(twisted_f2):
    assert fixed_subring(twisted_f2.pi) == [(1, 1)]
    alg = truncated(QQ, 3)
    assert r_delta(DeltaFamily(alg, [d_dy(alg)])) == [(1, 0, 0)]
    zero = DeltaFamily(alg, [AddMap.zero(QQ, 3)])
    assert len(r_delta(zero)) == 3
    assert len(r_delta(DeltaFamily(alg, []))) == 3
    assert is_delta_commutative(DeltaFamily(alg, []))


def test_fixed_subring_matches_kernel_for_delta_pi():
    cfg = fixtures.load("f3_uv")
    pi = cfg.pi
    ker = r_delta(pi.family)
    eq = fixed_subring_by_equations(pi, 2)
    assert ker == eq == [tuple([1] + [0] * 8)]
    assert is_delta_commutative(pi.family)


def test_leibniz_power_rule():
    alg = truncated(QQ, 4)
    assert leibniz_power_check(alg, y_times_d(alg), 6)
    assert leibniz_power_check(alg, y_times_d(alg, 2), 6)
    assert not leibniz_power_check(alg, d_dy(alg), 1)
    assert leibniz_power_check(alg, d_dy(alg), 0)


def test_strong_matches_kernel_derivations():
    for name in ("f5_trunc_5", "q_trunc_3", "f3_uv"):
        pi = fixtures.load(name).pi
        c = classify(pi, 2)
        assert c.strong_left == is_kernel_derivation_family(pi.family, "left")
        assert c.strong_right == is_kernel_derivation_family(pi.family, "right")
        assert c.well_ordered


def test_explicit_pi_defaults(twisted_f2):
    pi = twisted_f2.pi
    zero, g = twisted_f2.monoid.parse("0"), twisted_f2.monoid.parse("g")
    assert pi.lookup(zero, g).is_zero()
    assert pi.lookup(g, g) == AddMap.identity(pi.algebra.base, 2)
    assert pi.support(g) == [zero, g]
    assert isinstance(pi, ExplicitPi)


def test_materialize_agrees(q_pi):
    t = q_pi.materialize(3)
    for a in q_pi.range_elements(3):
        for b in q_pi.range_elements(3):
            assert t.lookup(a, b) == q_pi.lookup(a, b)


def test_report_json(twisted_f2):
    js = check_all(twisted_f2.pi).to_json(twisted_f2.monoid)
    d5 = next(s for s in js["axioms"] if s["axiom"] == "D5")
    assert d5 == {"axiom": "D5", "status": "fail", "scope": "exhaustive", "witness": {"a": "g", "b": "0", "r": 0, "s": 0}}
    assert js["fixed_subring_basis"] == [["1", "1"]]
