from pathlib import Path

import pytest

from embcomp import ComponentSpec, NumericalConfig, OracleHandle, Ring, parse_system

ROOT = Path(__file__).resolve().parent.parent
PROBLEMS = ROOT / "problems"
DATA = Path(__file__).resolve().parent / "data"


def system(names, gens):
    ring = Ring(tuple(names))
    return ring, parse_system(gens, ring)


@pytest.fixture
def cfg():
    return NumericalConfig()


@pytest.fixture
def embedded_cusp():
    return system("xy", ["x*(y^2-x^3)", "y*(y^2-x^3)"])


@pytest.fixture
def zaxis():
    """<x^3+y, y^3> in C[x,y,z] with the z-axis as its only component."""
    ring, F = system("xyz", ["x^3+y", "y^3"])
    h = OracleHandle([ComponentSpec("zaxis", 1, parametrization=["0", "0", "t1"])], F, NumericalConfig())
    return ring, F, h


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
