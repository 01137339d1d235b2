import numpy as np
import pytest

from embcomp import LocalDual, deflate, fiber_dual_dim, parse_polynomial
from embcomp.deflation import fiber_matrix

from .conftest import system


def test_double_root():
    ring, F = system("x", ["x^2"])
    D = deflate(F, 1)
    assert D.a_names == ("a_0", "a_1")
    assert D.to_strings() == ["x^2", "x^2*a_0 + 2*x*a_1"]
    assert fiber_dual_dim(F, [0], 1) == 2


def test_generator_count(embedded_cusp):
    _, F = embedded_cusp
    D = deflate(F, 1)
    assert len(D.generators) == 4 and len(D.betas) == 3
    # f_i times each monomial of degree <= d-1
    assert len(deflate(F, 3).generators) == 2 + 2 * 6


def test_deflation_vanishes_on_dual(embedded_cusp):
    _, F = embedded_cusp
    D = deflate(F, 2)
    B = LocalDual(F, [0, 0]).compute(2)
    # a = coefficients of a dual functional, in the beta order of the deflation
    from embcomp.poly import monomials_upto
    monos = monomials_upto(2, 2)
    perm = [monos.index(b) for b in D.betas]
    M = fiber_matrix(D, [0, 0])
    assert np.allclose(M @ B[:, perm].T, 0, atol=1e-10)


@pytest.mark.parametrize("point,d,expected", [((0, 0), 4, 10), ((1, 1), 3, 4)])
def test_fiber_dims(embedded_cusp, point, d, expected):
    _, F = embedded_cusp
    assert fiber_dual_dim(F, point, d) == expected


def test_order_must_be_positive(embedded_cusp):
    _, F = embedded_cusp
    with pytest.raises(ValueError):
        deflate(F, 0)


def test_deflated_system_parses_back(embedded_cusp):
    ring, F = embedded_cusp
    D = deflate(F, 2)
    for s, g in zip(D.to_strings(17), D.generators):
        assert parse_polynomial(s, D.ring).allclose(g)
