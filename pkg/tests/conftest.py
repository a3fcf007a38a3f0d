from fractions import Fraction

import pytest

from orelab import fixtures
from orelab.coeffring import AddMap, Algebra
from orelab.scalars import QQ, PrimeField

ACCEPTANCE_LINES = {}


def truncated(base, n, names=True):
    """``base[y]/(y^n)`` on the monomial basis."""
    sc = [[[1 if i + j == k else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    nm = (["1", "y"] + [f"y^{i}" for i in range(2, n)])[:n] if names else None
    return Algebra(base, n, sc, [1] + [0] * (n - 1), nm)


def d_dy(alg):
    n = alg.dim
    return AddMap(alg.base, [[(j if i == j - 1 else 0) for j in range(n)] for i in range(n)])


def product_ring(base, n):
    sc = [[[1 if i == j == k else 0 for k in range(n)] for j in range(n)] for i in range(n)]
    return Algebra(base, n, sc, [1] * n)


def matrix_algebra(base):
    E = [(0, 0), (0, 1), (1, 0), (1, 1)]
    sc = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for a, (i, j) in enumerate(E):
        for b, (k, l) in enumerate(E):
            if j == k:
                sc[a][b][E.index((i, l))] = 1
    return Algebra(base, 4, sc, [1, 0, 0, 1], ["E11", "E12", "E21", "E22"])


@pytest.fixture
def F2():
    return PrimeField(2)


@pytest.fixture
def F3():
    return PrimeField(3)


@pytest.fixture
def twisted_f2():
    return fixtures.load("twisted_f2")


@pytest.fixture
def q3():
    return truncated(QQ, 3)


def frac(s):
    return Fraction(s)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
