import pytest

from orelab.errors import InvalidMonoid, OutOfRange, ParseError
from orelab.monoid import FiniteMonoid, FreeCommutativeMonoid, factorizations, m_cmp, m_op, two_element_monoid


def test_two_element_monoid():
    G = two_element_monoid()
    assert m_op(G, 1, 1) == 1 and m_op(G, 0, 1) == 1
    assert factorizations(G, 0) == [(0, 0)]
    assert factorizations(G, 1) == [(0, 1), (1, 0), (1, 1)]
    assert G.validate().valid
    assert m_cmp(G, 0, 1) == -1


def test_free_monoid():
    N2 = FreeCommutativeMonoid(2)
    assert m_op(N2, (1, 0), (0, 2)) == (1, 2)
    assert factorizations(FreeCommutativeMonoid(1), (2,)) == [((0,), (2,)), ((1,), (1,)), ((2,), (0,))]
    assert len(factorizations(N2, (2, 3))) == 12
    assert m_cmp(N2, (1, 1), (0, 2)) == -1


def test_out_of_range():
    G = two_element_monoid()
    with pytest.raises(OutOfRange):
        m_op(G, 0, 2)
    with pytest.raises(OutOfRange):
        m_op(FreeCommutativeMonoid(2), (1,), (0, 1))


def test_validation_reports():
    bad = FiniteMonoid(2, 0, [[0, 1], [0, 1]], [0, 1])
    rep = bad.validate()
    assert not rep.valid and ("commutativity", 0, 1) in rep.violations
    order = FiniteMonoid(2, 0, [[0, 1], [1, 1]], [1, 0]).validate()
    assert ("order", "identity must come first") in order.violations
    with pytest.raises(InvalidMonoid):
        FiniteMonoid(2, 0, [[0, 1]], [0, 1])


def test_cyclic_group_order_three():
    z3 = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    G = FiniteMonoid(3, 0, z3, [0, 1, 2])
    assert G.validate().valid
    assert sorted(factorizations(G, 0)) == [(0, 0), (1, 2), (2, 1)]


def test_parse_and_format():
    G = two_element_monoid()
    assert G.parse("g") == 1 and G.fmt(1) == "g"
    with pytest.raises(ParseError):
        G.parse("h")
    N = FreeCommutativeMonoid(2)
    assert N.parse("[1, 0]") == (1, 0) and N.fmt((1, 0)) == "[1,0]"
    with pytest.raises(ParseError):
        N.parse("[1]")


def test_enumeration_order():
    assert FreeCommutativeMonoid(2).elements(1) == [(0, 0), (1, 0), (0, 1)]
    assert two_element_monoid().elements() == [0, 1]
