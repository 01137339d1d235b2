import json

import numpy as np
import pytest

from embcomp import InconclusiveError, LocalDual, NumericalConfig, Ring, ideal_membership, is_member, parse_polynomial
from embcomp.colon import HomogenizedColon, colon_dual
from embcomp.dual import GradedDual

from .conftest import DATA, system
from .oracles import colon_generators, macaulay_dims

COLONS = [
    ("xy", ["x*(y^2-x^3)", "y*(y^2-x^3)"], "x", True),
    ("xy", ["x*(y^2-x^3)", "y*(y^2-x^3)"], "y^2-x^3", False),
    ("xy", ["x^3", "x^2*y^2", "y^4"], "x*y", True),
    ("xy", ["x*y", "x^2+y^3"], "x", False),
    ("xy", ["x*y", "x^2+y^3"], "y+x", False),
]


@pytest.mark.parametrize("names,gens,g,homogeneous", COLONS)
def test_colon_dual_against_exact_colon(names, gens, g, homogeneous):
    ring, F = system(names, gens)
    gp = parse_polynomial(g, ring)
    k = 6
    L = LocalDual(F, [0, 0])
    num = [colon_dual(L.basis(j), gp).dim for j in range(gp.order(), k + 1)]
    exact = macaulay_dims(list(names), colon_generators(list(names), gens, g), (0, 0), k - gp.order())
    # g . D^j[I] sits inside D^{j - ord g}[I : g] and catches up once stable
    assert all(a <= b for a, b in zip(num, exact))
    assert num[-1] == exact[-1]
    if homogeneous:
        assert num == exact


def test_homogenized_colon_corners():
    ring, F = system("xy", ["x*(y^2-x^3)", "y*(y^2-x^3)"])
    graded = GradedDual([f.homogenize() for f in F])
    g = parse_polynomial("x", ring)
    C = HomogenizedColon(graded, g)
    for _ in range(6):
        C.advance()
    dehom = sorted({c[:-1] for c in C.corners})
    # I : x = <y^2 - x^3>, whose local initial ideal is <y^2>
    assert (0, 2) in dehom


def test_membership_examples():
    ring, F = system("x", ["x"])
    assert ideal_membership(F, parse_polynomial("x", ring)) is True
    ring, F = system("x", ["x^2"])
    assert ideal_membership(F, parse_polynomial("x", ring)) is False
    assert ideal_membership(F, parse_polynomial("0*x", ring)) is True


def test_membership_at_translated_point():
    ring, F = system("xy", ["x*(y^2-x^3)", "y*(y^2-x^3)"])
    # at the smooth point (1, 1) the local ideal is <y^2 - x^3>
    assert ideal_membership(F, parse_polynomial("y^2-x^3", ring), y=[1, 1]) is True
    assert ideal_membership(F, parse_polynomial("x-1", ring), y=[1, 1]) is False


def test_is_member_returns_none_when_inconclusive():
    ring, F = system("xy", ["x*y"])
    cfg = NumericalConfig(max_degree=1)
    g = parse_polynomial("x^3*y^3 + x^2", ring)
    with pytest.raises(InconclusiveError):
        ideal_membership(F, g, cfg)
    assert is_member(F, g, cfg) is None


def test_golden_membership_subset():
    data = json.loads((DATA / "membership_golden.json").read_text())
    entry = data["node"]
    ring = Ring(tuple(entry["variables"]))
    F = [parse_polynomial(s, ring) for s in entry["generators"]]
    assert all(ideal_membership(F, parse_polynomial(s, ring)) for s in entry["members"][:3])
    assert not any(ideal_membership(F, parse_polynomial(s, ring)) for s in entry["non_members"][:3])
