import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from embcomp import Polynomial, Ring, parse_polynomial
from embcomp.errors import RingMismatchError
from embcomp.poly import compare_primal, monomials_of_degree, monomials_upto, primal_key

R = Ring(("x", "y"))
exponents = st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))


def p(text, ring=R):
    return parse_polynomial(text, ring)


def test_primal_order_examples():
    assert compare_primal((0, 0), (1, 0)) == 1
    assert compare_primal((1, 1), (0, 2)) == 1
    assert compare_primal((2, 0), (2, 0)) == 0
    assert monomials_of_degree(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials_upto(2, 1) == ((0, 0), (1, 0), (0, 1))


@given(exponents, exponents)
def test_order_is_total_and_antisymmetric(a, b):
    assert compare_primal(a, b) == -compare_primal(b, a)
    assert (compare_primal(a, b) == 0) == (a == b)


@given(exponents, exponents, exponents)
def test_order_is_multiplicative_and_transitive(a, b, c):
    ac = tuple(u + v for u, v in zip(a, c))
    bc = tuple(u + v for u, v in zip(b, c))
    assert compare_primal(ac, bc) == compare_primal(a, b)
    if compare_primal(a, b) >= 0 and compare_primal(b, c) >= 0:
        assert compare_primal(a, c) >= 0


@given(exponents)
def test_one_is_largest(a):
    assert compare_primal((0, 0, 0), a) >= 0


def test_homogenized_order_matches_dehomogenized():
    monos = monomials_of_degree(3, 3, homogenized=True)
    images = [m[:-1] for m in monos]
    assert images == sorted(images, key=primal_key)


def test_arithmetic():
    f = p("x + y")
    assert f * f == p("x^2 + 2*x*y + y^2")
    assert (f - f).is_zero()
    assert f ** 3 == f * f * f
    assert 2 * f == p("2*x + 2*y")
    assert f.degree() == 1 and p("x^2*y + x + 1").order() == 0


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        p("x") + parse_polynomial("x", Ring(("x", "z")))


def test_shift_evaluate():
    f = p("x^3 - 2*x*y + y^2 + 1")
    y = np.array([0.3 - 1j, 2.0])
    g = f.shift(y)
    z = np.array([0.7, -0.2 + 0.5j])
    assert np.isclose(g.evaluate(z), f.evaluate(z + y))


def test_normalized_derivative():
    f = p("x^3*y^2")
    assert f.normalized_derivative((2, 1)) == p("6*x*y")


def test_homogenize_roundtrip():
    f = p("x^3 + x*y + 1")
    H = f.homogenize()
    assert H.is_homogeneous() and H.degree() == 3
    assert H.dehomogenize() == f


def test_initial_term_is_lowest_degree():
    assert p("x^3 + x*y + y^2").initial_term() == (1, 1)


def test_to_string_roundtrip():
    f = p("(1+2*i)*x^2*y - 3.5*y + 2 - x")
    assert parse_polynomial(f.to_string(17), R).allclose(f)
    assert p("x - y").to_string() == "x - y"


def test_chop():
    f = Polynomial(R, {(1, 0): 1.0 + 1e-14j, (0, 1): 1e-13})
    assert f.chop() == p("x")


def test_to_string_with_variable_named_i():
    ring = Ring(("i", "j"))
    f = parse_polynomial("i*j + ii + (2-3*ii)*j", ring)
    assert parse_polynomial(f.to_string(17), ring).allclose(f)
