from fractions import Fraction
from itertools import product

import pytest

from orelab.errors import NotPrime, ParseError, UnsupportedBase
from orelab.linalg import Subspace, express, integer_kernel, nullspace, rank, solve
from orelab.scalars import QQ, ModRing, PrimeField, base_from_tag


def test_tags_round_trip():
    for tag in ("Fp:5", "Zn:4", "Q"):
        assert base_from_tag(tag).tag == tag


@pytest.mark.parametrize("tag", ["Fp:4", "Fp:1", "Zn:x", "R", "Fq:3"])
def test_bad_tags(tag):
    with pytest.raises((ParseError, NotPrime)):
        base_from_tag(tag)


def test_prime_field_inverse_exhaustive():
    F = PrimeField(7)
    for a in range(1, 7):
        assert F.mul(a, F.inv(a)) == 1


def test_mod_ring_has_zero_divisors():
    Z = ModRing(4)
    assert Z.mul(2, 2) == 0
    assert not Z.is_field


def test_exact_add_sub():
    for a, b in product([Fraction(1, 3), Fraction(-5, 7), Fraction(0)], repeat=2):
        assert QQ.sub(QQ.add(a, b), b) == a
    F = PrimeField(5)
    for a, b in product(range(5), repeat=2):
        assert F.sub(F.add(a, b), b) == a


def test_rational_format_lowest_terms():
    assert QQ.fmt(QQ.parse("6/4")) == "3/2"
    assert QQ.fmt(QQ.parse("-2/1")) == "-2"
    with pytest.raises(ParseError):
        QQ.parse("1/0")


def test_nullspace_is_kernel_over_f3():
    F = PrimeField(3)
    rows = [[1, 2, 0, 1], [0, 1, 1, 2]]
    ker = nullspace(F, rows, 4)
    assert len(ker) == 2
    for v in ker:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) % 3 == 0


def test_nullspace_over_q_exact():
    rows = [[Fraction(1), Fraction(1, 2)], [Fraction(2), Fraction(1)]]
    (v,) = nullspace(QQ, rows, 2)
    assert v == (Fraction(-1, 2), Fraction(1))


def test_solve_and_express():
    F = PrimeField(5)
    x = solve(F, [[1, 1], [1, 4]], [2, 0], 2)
    assert (x[0] + x[1]) % 5 == 2 and (x[0] + 4 * x[1]) % 5 == 0
    assert solve(F, [[1, 1], [1, 1]], [0, 1], 2) is None
    assert express(F, [(1, 0), (0, 1)], (3, 4)) == (3, 4)


def test_subspace_intersection_and_join():
    F = PrimeField(2)
    U = Subspace(F, 3, [(1, 0, 0), (0, 1, 0)])
    W = Subspace(F, 3, [(0, 1, 0), (0, 0, 1)])
    assert U.intersect(W).basis == ((0, 1, 0),)
    assert U.join(W).is_full()
    assert rank(F, [(1, 1, 0), (1, 1, 0)], 3) == 1


def test_subspace_refuses_mod_ring():
    with pytest.raises(UnsupportedBase):
        Subspace(ModRing(4), 2)


def test_integer_kernel_is_kernel():
    rows = [[2, 4, 6], [1, 3, 5]]
    for v in integer_kernel(rows, 3):
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def test_mod_n_kernel_matches_enumeration():
    Z = ModRing(4)
    rows = [[2, 0], [0, 1]]
    gens = nullspace(Z, rows, 2)
    # solution set of 2a = 0, b = 0 mod 4 is {(0,0), (2,0)}
    span = {(0, 0)}
    for _ in range(3):
        span |= {((a + c * g[0]) % 4, (b + c * g[1]) % 4) for a, b in span for g in gens for c in range(4)}
    brute = {(a, b) for a in range(4) for b in range(4) if (2 * a) % 4 == 0 and b % 4 == 0}
    assert span == brute
