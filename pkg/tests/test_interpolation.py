import pytest

from embcomp import ComponentSpec, OracleHandle, dual_dims_of_truncated_ideal, interpolate_isolated, parse_polynomial

from .conftest import system


@pytest.fixture
def cusp(embedded_cusp):
    ring, F = embedded_cusp
    return ring, F, OracleHandle([ComponentSpec("cusp", 1, parametrization=["t1^2", "t1^3"])], F)


@pytest.mark.parametrize("e", [1, 2])
def test_low_degrees_empty(cusp, e):
    _, _, h = cusp
    T = interpolate_isolated(h, "cusp", e)
    assert T.dim == 0
    assert dual_dims_of_truncated_ideal(T, [0, 0], 4) == [1, 3, 6, 10, 15]


def test_cubic_part(cusp):
    ring, _, h = cusp
    T = interpolate_isolated(h, "cusp", 3)
    assert T.dim == 1 and T.contains(parse_polynomial("y^2-x^3", ring), 1e-6)
    assert dual_dims_of_truncated_ideal(T, [0, 0], 4) == [1, 3, 5, 7, 9]


def test_multiples_in_higher_degree(cusp):
    # (y^2 - x^3) times monomials of degree <= e - 3
    _, _, h = cusp
    assert interpolate_isolated(h, "cusp", 4).dim == 3


def test_line_in_space():
    ring, F = system("xyz", ["x", "y"])
    h = OracleHandle([ComponentSpec("line", 1, parametrization=["0", "0", "t1"])], F)
    T = interpolate_isolated(h, "line", 1)
    x, y, _ = ring.gens()
    assert T.dim == 2 and T.contains(x) and T.contains(y)
