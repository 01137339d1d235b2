import numpy as np
import pytest

from embcomp import ParseError, Ring, parse_polynomial, parse_system
from embcomp.parse import compile_expression

R = Ring(("x", "y"))


def test_parse_basic():
    f = parse_polynomial("x*(y^2-x^3)", R)
    assert f.coefficient((4, 0)) == -1 and f.coefficient((1, 2)) == 1


def test_imaginary_unit_and_implicit_products():
    f = parse_polynomial("(1+2*i)*x - i*y", R)
    assert f.coefficient((1, 0)) == 1 + 2j and f.coefficient((0, 1)) == -1j


def test_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_system(["x", "(x+y"], R)
    assert (exc.value.line, exc.value.column) == (2, 5)
    with pytest.raises(ParseError, match="unknown variable"):
        parse_polynomial("x + z", R)


def test_compile_expression():
    fn = compile_expression("-1/t1 + 2*t1^2", ["t1"])
    assert np.isclose(fn(np.array([2.0])), -0.5 + 8)
