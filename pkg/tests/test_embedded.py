import numpy as np
import pytest

from embcomp import (
    ComponentSpec,
    EmbeddedVerdict,
    NumericalConfig,
    OracleHandle,
    PreconditionError,
    double_truncation,
    ideal_membership,
    ideal_truncation,
    is_origin_embedded,
    is_point_embedded,
    is_witness_polynomial,
    parse_polynomial,
    slice_suspect,
)

from .conftest import system


def span_matches(T, polys, tol=1e-8):
    return T.dim == len(polys) and all(T.contains(p, tol) for p in polys)


def cusp_oracle(F):
    return OracleHandle([ComponentSpec("cusp", 1, parametrization=["t1^2", "t1^3"])], F)


def test_double_truncation_family(zaxis):
    ring, F, h = zaxis
    x, y, z = ring.gens()
    assert span_matches(double_truncation(h, 1, 0), [x, y])
    assert span_matches(double_truncation(h, 1, 1), [y])
    assert span_matches(double_truncation(h, 1, 2), [y])
    assert double_truncation(h, 1, 3).dim == 0


def test_double_truncation_decreases_in_e(embedded_cusp):
    _, F = embedded_cusp
    h = cusp_oracle(F)
    dims = [double_truncation(h, 3, e).dim for e in range(5)]
    assert dims == sorted(dims, reverse=True)


def test_witness_polynomial(embedded_cusp):
    ring, F = embedded_cusp
    assert is_witness_polynomial(F, parse_polynomial("y^2-x^3", ring), 4)
    assert not is_witness_polynomial(F, parse_polynomial("1+0*x", ring), 4)


def test_ideal_truncation_cusp(embedded_cusp):
    ring, F = embedded_cusp
    h = cusp_oracle(F)
    assert ideal_truncation(F, h, 2).dim == 0
    J = ideal_truncation(F, h, 3)
    assert J.certified and span_matches(J, [parse_polynomial("y^2-x^3", ring)], 1e-6)


def test_embedded_cusp_origin_embedded(embedded_cusp):
    ring, F = embedded_cusp
    v = is_origin_embedded(F, cusp_oracle(F))
    assert v.verdict and v.certificate_type == "witness"
    assert v.degrees["d"] == 3
    assert not ideal_membership(F, v.witness_poly)


def test_crossing_lines_not_embedded():
    ring, F = system("xy", ["x*y"])
    h = OracleHandle([ComponentSpec("xaxis", 1, parametrization=["t1", "0"]),
                      ComponentSpec("yaxis", 1, parametrization=["0", "t1"])], F)
    v = is_point_embedded(F, [0, 0], h)
    assert not v.verdict and v.certificate_type == "coverage"


def test_preconditions(embedded_cusp):
    ring, F = embedded_cusp
    h = cusp_oracle(F)
    with pytest.raises(PreconditionError, match="smooth point"):
        is_point_embedded(F, [1, 1], h)
    with pytest.raises(PreconditionError, match="no listed"):
        is_point_embedded(F, [0, 0], h.with_components([]))
    with pytest.raises(PreconditionError, match="0-dimensional"):
        slice_suspect(F, ComponentSpec("p", 0, points=[np.zeros(2)]), h)


def test_verdict_consistency():
    with pytest.raises(ValueError):
        EmbeddedVerdict(False, "witness")
    with pytest.raises(ValueError):
        EmbeddedVerdict(True, "coverage")


def test_translated_witness(embedded_cusp):
    # move the cusp so the embedded point sits at (1, 2)
    ring, F0 = embedded_cusp
    G = [f.shift([-1, -2]) for f in F0]
    h = OracleHandle([ComponentSpec("cusp", 1, parametrization=["t1^2+1", "t1^3+2"])], G)
    v = is_point_embedded(G, [1, 2], h)
    assert v.verdict
    assert abs(v.witness_poly.evaluate(np.array([1 + 0.25, 2 + 0.125]))) < 1e-8


def test_cyclic4_single_point():
    ring, F = system(["x1", "x2", "x3", "x4"],
                     ["x1+x2+x3+x4", "x1*x2+x2*x3+x3*x4+x4*x1",
                      "x1*x2*x3+x2*x3*x4+x3*x4*x1+x4*x1*x2", "x1*x2*x3*x4-1"])
    comps = [ComponentSpec(i, 1, parametrization=p, center=0.8 + 0.8j, radius=0.4)
             for i, p in [("c1", ["-t1", "-1/t1", "t1", "1/t1"]), ("c2", ["-t1", "1/t1", "t1", "-1/t1"])]]
    y = np.array([1j, -1j, -1j, 1j])
    v = is_point_embedded(F, y, OracleHandle(comps, F))
    assert v.verdict and v.witness_poly.degree() == 1
    assert (v.degrees["d"], v.degrees["e"]) == (1, 4)
