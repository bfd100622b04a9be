import random
from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_rationals
from hypersum.exact import pochhammer
from hypersum.polynomials import (
    RationalPolynomial as P,
    poly_add,
    poly_eval,
    poly_mul,
    poly_negate_variable,
    poly_scale,
    poly_shift_variable,
    poly_to_text,
    rising_factorial_poly,
    sigma_coefficients,
)

t = P.variable()

polys = st.lists(small_rationals, max_size=5).map(P)


def test_ring_examples():
    assert poly_mul(t, t + 1) == P([0, 1, 1])
    p = P([3, F(1, 2), 7])
    assert poly_add(P(), p) == p
    assert poly_mul(2 * t - 1, 2 * t + 1) == P([-1, 0, 4])
    assert poly_scale(p, 0).is_zero()


def test_canonical_degree():
    assert P([1, 2, 0, 0]).coeffs == (F(1), F(2))
    assert P([0, 0]).degree is None
    assert P().is_zero()
    assert P([5]).degree == 0


def test_eval_examples():
    assert poly_eval(P([1, 0, 1]), 2) == 5
    p = P([F(7, 3), 4, -1])
    assert poly_eval(p, 0) == F(7, 3)
    eta = F(6)
    assert poly_eval(1 - t * (1 / eta), -3) == F(3, 2)


def test_rising_factorial_poly_examples():
    assert rising_factorial_poly(1, 0) == P([1])
    assert rising_factorial_poly(1, 1) == P([1, 1])
    assert rising_factorial_poly(F(1, 2), 2) == P([F(3, 4), 2, 1])


def test_sigma_examples():
    assert sigma_coefficients([], []) == [F(1)]
    f = F(5, 3)
    assert sigma_coefficients([f], [1]) == [f, F(1)]
    assert sigma_coefficients([2, 3], [1, 1]) == [6, 5, 1]


def test_sigma_constant_term_and_leading_one():
    rng = random.Random(3)
    for _ in range(100):
        r = rng.randint(0, 3)
        f_list = [F(rng.randint(-12, 12), rng.randint(1, 12)) for _ in range(r)]
        m_list = [rng.randint(1, 3) for _ in range(r)]
        sigma = sigma_coefficients(f_list, m_list)
        lam = F(1)
        for f, m in zip(f_list, m_list):
            lam *= pochhammer(f, m)
        assert sigma[0] == lam
        assert sigma[-1] == 1
        assert len(sigma) == sum(m_list) + 1


def test_rising_poly_matches_scalar_pochhammer():
    rng = random.Random(5)
    for _ in range(100):
        f = F(rng.randint(-12, 12), rng.randint(1, 12))
        m, s = rng.randint(0, 5), rng.randint(0, 10)
        assert poly_eval(rising_factorial_poly(f, m), s) == pochhammer(f + s, m)


@settings(max_examples=100)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))
    assert poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r))
    assert poly_add(p, q) == poly_add(q, p)
    assert poly_mul(p, q) == poly_mul(q, p)


@given(polys, small_rationals, small_rationals)
def test_substitutions(p, x, h):
    assert poly_eval(poly_negate_variable(p), x) == poly_eval(p, -x)
    assert poly_eval(poly_shift_variable(p, h), x) == poly_eval(p, x + h)


def test_text_rendering():
    assert poly_to_text(P([1, F(-5, 6), F(1, 6)])) == "1 - 5/6*t + 1/6*t^2"
    assert poly_to_text(P()) == "0"
    assert poly_to_text(P([0, 0, 3])) == "3*t^2"
    assert str(P([F(-1, 2), 1])) == "-1/2 + 1*t"
