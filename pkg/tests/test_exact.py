from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morikit.exact import (
    QPolynomial,
    binom0,
    binomial_poly,
    fmt,
    kernel_basis,
    mat_vec,
    primitive,
    project_away,
    q,
    rank,
    row_space_basis,
)

small = st.integers(-6, 6)


def test_q_parses_strings_and_rejects_garbage():
    assert q("3/6") == Fraction(1, 2)
    assert q(" -4 ") == -4
    for bad in ("", "1/0/2", "a", "1 /2", "1.5.2"):
        with pytest.raises((ValueError, ZeroDivisionError)):
            q(bad)
    with pytest.raises(TypeError):
        q(True)
    with pytest.raises(TypeError):
        q(1.5)


def test_fmt_round_trip():
    for x in (Fraction(-7, 3), Fraction(0), Fraction(12), Fraction(1, 10**30)):
        assert q(fmt(x)) == x
    assert fmt(Fraction(4, 2)) == "2"
    assert fmt(Fraction(-1, 3)) == "-1/3"


def test_primitive_keeps_direction():
    assert primitive((Fraction(2, 3), Fraction(-4, 3), 0)) == (1, -2, 0)
    assert primitive((-2, 4)) == (-1, 2)
    assert primitive((-2, 4), signed=True) == (1, -2)
    assert primitive((0, 0)) == (0, 0)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=5, max_size=5), min_size=1, max_size=6))
def test_rank_matches_numpy(rows):
    assert rank(rows) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=6, max_size=6), min_size=1, max_size=5))
def test_kernel_is_kernel(rows):
    K = kernel_basis(rows)
    assert len(K) == 6 - rank(rows)
    for v in K:
        assert all(x == 0 for x in mat_vec(rows, v))
        assert next(x for x in v if x) > 0
    if K:
        assert rank(K) == len(K)


def test_kernel_without_rows():
    assert kernel_basis([], 3) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    with pytest.raises(ValueError):
        kernel_basis([])


def test_row_space_basis_is_canonical():
    a = row_space_basis([(1, 2, 3), (2, 4, 7)])
    b = row_space_basis([(3, 6, 10), (1, 2, 3)])
    assert a == b


def test_project_away_is_orthogonal():
    v = project_away((3, 1, 4), [(1, 1, 0)])
    assert sum(a * b for a, b in zip(v, (1, 1, 0))) == 0
    assert v == (Fraction(1), Fraction(-1), Fraction(4))


@pytest.mark.parametrize("a,n", [(5, 2), (2, 3), (-1, 3), (3, 3), (10, 0), (-4, 0)])
def test_binom0(a, n):
    expected = comb(a, n) if a >= n else 0
    assert binom0(a, n) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(-4, 6), st.integers(-5, 8), st.integers(0, 5), st.integers(0, 6))
def test_binomial_poly_evaluates_falling_factorial(alpha, beta, n, t):
    x = alpha * t + beta
    num = 1
    for i in range(n):
        num *= x - i
    assert binomial_poly(alpha, beta, n)(t) == Fraction(num, factorial(n))


def test_polynomial_arithmetic():
    p = QPolynomial((1, 2))  # 1 + 2t
    r = QPolynomial((0, 1))
    assert (p * p).coefficients == (1, 4, 4)
    assert (p - p).is_zero()
    assert (p + 1)(3) == 8
    assert (2 - r)(5) == -3
    assert QPolynomial((1, 0, 0)).degree == 0
    assert QPolynomial().degree == -1
    assert str(QPolynomial((1, Fraction(5, 2), Fraction(5, 2)))) == "(5/2)*t^2 + (5/2)*t + 1"
