"""Multi-indices in N^k: pointwise order, multi-binomials, graded lex order.

A multi-index is a tuple of non-negative ints.  Index ``i`` of the tuple is
variable ``x_{i+1}``; larger positions are "larger" variables, which is
what the graded lexicographical tie-break looks at first.
"""

from __future__ import annotations

import math
from itertools import product

import sympy

from .errors import ArityMismatch, NotPrime, SubtractionUnderflow

NEG_INF = float("-inf")


def _same_arity(f, g):
    if len(f) != len(g):
        raise ArityMismatch(f"arity {len(f)} vs {len(g)}")


def mi_add(f, g) -> tuple:
    _same_arity(f, g)
    return tuple(a + b for a, b in zip(f, g))


def mi_le(f, g) -> bool:
    """Componentwise ``f <= g``."""
    _same_arity(f, g)
    return all(a <= b for a, b in zip(f, g))


def mi_sub(f, g) -> tuple:
    """``f - g``; requires ``g <= f``."""
    _same_arity(f, g)
    if not mi_le(g, f):
        raise SubtractionUnderflow(f"{list(g)} is not <= {list(f)}")
    return tuple(a - b for a, b in zip(f, g))


def weight(f) -> int:
    return sum(f)


def sign(f) -> int:
    """``(-1)^|f|``."""
    return -1 if weight(f) % 2 else 1


def support(f) -> tuple:
    return tuple(i for i, a in enumerate(f) if a)


def multi_binom(f, g) -> int:
    """Exact integer ``prod_i C(f_i, g_i)``, zero when ``g`` is not below ``f``."""
    _same_arity(f, g)
    out = 1
    for a, b in zip(f, g):
        if b > a:
            return 0
        out *= math.comb(a, b)
    return out


def multi_binom_in(base, f, g):
    """``multi_binom(f, g)`` reduced into a base scalar ring."""
    return base.coerce(multi_binom(f, g))


def sort_key(f) -> tuple:
    """Key realising graded lex: weight first, then largest index first."""
    return (sum(f),) + tuple(reversed(f))


def graded_lex_cmp(f, g) -> int:
    """-1, 0 or 1 as ``f`` is less than, equal to or greater than ``g``."""
    _same_arity(f, g)
    kf, kg = sort_key(f), sort_key(g)
    return (kf > kg) - (kf < kg)


def below(f) -> list:
    """All ``g <= f`` in graded-lex order."""
    gs = [tuple(g) for g in product(*(range(a + 1) for a in f))]
    return sorted(gs, key=sort_key)


def up_to_weight(k: int, w: int) -> list:
    """All multi-indices of arity ``k`` and weight ``<= w``, graded-lex ascending."""
    if k == 0:
        return [()]
    out = [tuple(f) for f in product(range(w + 1), repeat=k) if sum(f) <= w]
    return sorted(out, key=sort_key)


def unit_index(k: int, i: int, n: int = 1) -> tuple:
    return tuple(n if j == i else 0 for j in range(k))


def fmt(f) -> str:
    return "[" + ",".join(str(a) for a in f) + "]"


def _require_prime(p):
    if p < 2 or not sympy.isprime(p):
        raise NotPrime(f"{p} is not prime")


def lucas_binom_mod_p(m: int, n: int, p: int) -> int:
    """``C(m, n) mod p`` as the product of base-``p`` digit binomials."""
    _require_prime(p)
    out = 1
    while m or n:
        a, b = m % p, n % p
        if b > a:
            return 0
        out = out * math.comb(a, b) % p
        m //= p
        n //= p
    return out % p


def p_power_index(t, p: int) -> tuple:
    """Componentwise ``p^t(i)`` with ``p^-inf = 0``."""
    _require_prime(p)
    return tuple(0 if e == NEG_INF else p ** int(e) for e in t)


def is_prime_power_exponent(a: int, p: int) -> bool:
    """True iff ``a == p^j`` for some ``j >= 0``."""
    if a < 1:
        return False
    while a % p == 0:
        a //= p
    return a == 1
