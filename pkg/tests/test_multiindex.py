import math
from itertools import product

import pytest

from orelab import multiindex as mi
from orelab.errors import ArityMismatch, NotPrime, SubtractionUnderflow
from orelab.scalars import PrimeField


def test_pointwise_ops():
    assert mi.mi_add((1, 2), (0, 3)) == (1, 5)
    assert mi.mi_le((1, 1), (2, 1)) and not mi.mi_le((2, 0), (1, 5))
    assert mi.mi_sub((2, 3), (1, 1)) == (1, 2)
    with pytest.raises(SubtractionUnderflow):
        mi.mi_sub((1, 0), (0, 1))
    with pytest.raises(ArityMismatch):
        mi.mi_add((1,), (1, 2))


def test_multi_binom_examples():
    assert mi.multi_binom((2, 1), (1, 1)) == 2
    assert mi.multi_binom((1, 0), (0, 1)) == 0
    for f in [(0, 0), (3, 1), (2, 2, 2)]:
        assert mi.multi_binom(f, (0,) * len(f)) == 1 == mi.multi_binom(f, f)
    assert mi.multi_binom_in(PrimeField(2), (2,), (1,)) == 0


def test_graded_lex_examples():
    assert mi.graded_lex_cmp((0, 2), (1, 2)) == -1
    assert mi.graded_lex_cmp((1, 1), (0, 2)) == -1
    assert mi.graded_lex_cmp((3, 0), (3, 0)) == 0
    assert mi.graded_lex_cmp((2, 0), (0, 2)) == -1
    with pytest.raises(ArityMismatch):
        mi.graded_lex_cmp((1,), (1, 0))


def test_graded_lex_total_and_extends_partial_order():
    pts = list(product(range(4), repeat=3))
    for f, g in product(pts, repeat=2):
        c = mi.graded_lex_cmp(f, g)
        assert c == -mi.graded_lex_cmp(g, f)
        assert (c == 0) == (f == g)
        if f != g and mi.mi_le(f, g):
            assert c == -1


def test_graded_lex_minimum_exists():
    pts = list(product(range(6), repeat=2))
    # every window of the sorted list has a least element under the comparison
    srt = sorted(pts, key=mi.sort_key)
    for i in range(len(srt)):
        sub = srt[i:]
        m = min(sub, key=mi.sort_key)
        assert all(mi.graded_lex_cmp(m, x) <= 0 for x in sub)


def test_vandermonde_exhaustive():
    for k in (1, 2, 3):
        rng = range(3) if k == 3 else range(5)
        for g, h in product(product(rng, repeat=k), repeat=2):
            f = mi.mi_add(g, h)
            for l in mi.below(f):
                s = sum(
                    mi.multi_binom(g, p) * mi.multi_binom(h, mi.mi_sub(l, p))
                    for p in mi.below(l)
                    if mi.mi_le(mi.mi_sub(l, p), h) and mi.mi_le(p, g)
                )
                assert s == mi.multi_binom(f, l)


def test_symmetric_pair_identity():
    for f in product(range(5), repeat=2):
        for g, h in product(mi.below(f), repeat=2):
            lhs = mi.multi_binom(f, g) * (mi.multi_binom(mi.mi_sub(f, g), h) if mi.mi_le(g, f) else 0)
            rhs = mi.multi_binom(f, h) * (mi.multi_binom(mi.mi_sub(f, h), g) if mi.mi_le(h, f) else 0)
            assert lhs == rhs


def test_lucas_examples():
    assert mi.lucas_binom_mod_p(5, 2, 2) == 0
    for p in (2, 3, 5):
        assert all(mi.lucas_binom_mod_p(p, j, p) == 0 for j in range(1, p))
        assert mi.lucas_binom_mod_p(17, 0, p) == 1
    with pytest.raises(NotPrime):
        mi.lucas_binom_mod_p(4, 2, 4)


def test_lucas_against_direct():
    for p in (2, 3, 5):
        for m in range(0, 201, 7):
            for n in range(0, 201, 3):
                assert mi.lucas_binom_mod_p(m, n, p) == math.comb(m, n) % p


def test_p_power_index():
    assert mi.p_power_index((1, mi.NEG_INF), 2) == (2, 0)
    assert mi.p_power_index((0, 0), 3) == (1, 1)
    assert mi.p_power_index((mi.NEG_INF, mi.NEG_INF), 5) == (0, 0)
    with pytest.raises(NotPrime):
        mi.p_power_index((1,), 6)


def test_below_and_weights():
    assert mi.below((1, 1)) == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert len(mi.up_to_weight(2, 4)) == 15
    assert mi.sign((1, 2)) == -1 and mi.sign((1, 1)) == 1
    assert mi.fmt((2, 0, 1)) == "[2,0,1]"
    assert mi.is_prime_power_exponent(9, 3) and not mi.is_prime_power_exponent(6, 3)
