"""Fixture-backed component oracle: generic points on known components and duals there.

A component is given either by a parametrization ``C^dim -> C^N`` (strings in
the parameters ``t1 .. tdim``) or, when 0-dimensional, by a list of points.
Affine constraints ``A x = b`` restrict sampling to a slice of the component.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .dual import NumericalConfig, Point, as_coords, truncated_dual
from .errors import PreconditionError, SamplingError
from .parse import compile_expression

MIN_DISTANCE = 1e-3
NEWTON_STEPS = 60


def random_polydisc(rng, size):
    """Uniform samples from the complex unit polydisc."""
    r = np.sqrt(rng.random(size))
    theta = rng.random(size) * 2 * np.pi
    return r * np.exp(1j * theta)


def random_circle(rng, size):
    """Complex numbers uniform on the unit circle."""
    return np.exp(2j * np.pi * rng.random(size))


@dataclass
class ComponentSpec:
    id: str
    dim: int
    parametrization: list = None
    points: list = None
    # constrained sampling: A @ x == b
    constraints: tuple = None
    offset: np.ndarray = None
    # parameters are drawn from the polydisc of this radius around ``center``
    center: complex = 0.0
    radius: float = 1.0
    _fns: list = field(default=None, repr=False)

    def __post_init__(self):
        if (self.parametrization is None) == (self.points is None):
            raise ValueError(f"component {self.id}: give exactly one of parametrization or points")
        if self.points is not None:
            if self.dim != 0:
                raise ValueError(f"component {self.id}: point lists describe 0-dimensional components")
            self.points = [as_coords(p) for p in self.points]
        elif self._fns is None:
            params = [f"t{k + 1}" for k in range(self.dim)]
            self._fns = [compile_expression(s, params) for s in self.parametrization]
        if self.offset is None:
            self.offset = np.zeros(self.ambient_dim, dtype=complex)

    @property
    def ambient_dim(self):
        if self.points is not None:
            return self.points[0].size if self.points else 0
        return len(self.parametrization)

    @property
    def effective_dim(self):
        """Dimension after the affine constraints are imposed."""
        k = 0 if self.constraints is None else self.constraints[0].shape[0]
        return self.dim - k

    def random_parameters(self, rng):
        return self.center + self.radius * random_polydisc(rng, self.dim)

    def __call__(self, t):
        t = np.asarray(t, dtype=complex)
        return np.array([f(t) for f in self._fns], dtype=complex) - self.offset

    def jacobian(self, t, step=1e-7):
        t = np.asarray(t, dtype=complex)
        cols = []
        for k in range(self.dim):
            dt = np.zeros(self.dim, dtype=complex)
            dt[k] = step
            cols.append((self(t + dt) - self(t - dt)) / (2 * step))
        return np.array(cols).T.reshape(self.ambient_dim, self.dim)

    def translated(self, y):
        y = as_coords(y)
        if self.points is not None:
            return replace(self, points=[p - y for p in self.points], _fns=None,
                           constraints=_shift_constraints(self.constraints, y))
        return replace(self, offset=self.offset + y, constraints=_shift_constraints(self.constraints, y))

    def constrained(self, A, b):
        A = np.atleast_2d(np.asarray(A, dtype=complex))
        b = np.asarray(b, dtype=complex).ravel()
        if self.constraints is not None:
            A = np.vstack([self.constraints[0], A])
            b = np.concatenate([self.constraints[1], b])
        return replace(self, constraints=(A, b))

    def satisfies_constraints(self, x, tol=1e-8):
        if self.constraints is None:
            return True
        A, b = self.constraints
        return bool(np.linalg.norm(A @ x - b) <= tol * (1 + np.linalg.norm(b)))

    def _newton(self, t, residual, jac, tol=1e-12):
        for _ in range(NEWTON_STEPS):
            r = residual(t)
            if not np.all(np.isfinite(r)):
                return None
            if np.linalg.norm(r) < tol:
                return t
            step = np.linalg.lstsq(jac(t), -r, rcond=None)[0]
            t = t + step
        return t if np.linalg.norm(residual(t)) < tol * 1e4 else None

    def solve_constraints(self, t0):
        """Gauss-Newton from ``t0`` onto ``A phi(t) = b``; ``None`` on failure."""
        if self.constraints is None:
            return t0
        A, b = self.constraints
        return self._newton(t0, lambda t: A @ self(t) - b, lambda t: A @ self.jacobian(t))

    def locate(self, y, rng, starts=20):
        """Parameters ``t`` with ``phi(t) = y``, or ``None``."""
        y = as_coords(y)
        scale = 1 + np.linalg.norm(y)
        for k in range(starts):
            # half the starts from the sampling domain, half from a wider disc
            t0 = self.random_parameters(rng) if k % 2 == 0 else 3 * random_polydisc(rng, self.dim)
            t = self._newton(t0, lambda t: self(t) - y, self.jacobian, 1e-11 * scale)
            if t is not None and np.linalg.norm(self(t) - y) < 1e-8 * scale:
                return t
        return None

    def contains(self, y, rng=None, tol=1e-6):
        y = as_coords(y)
        if not self.satisfies_constraints(y, tol):
            return False
        if self.points is not None:
            return any(np.linalg.norm(p - y) < tol for p in self.points)
        rng = rng if rng is not None else np.random.default_rng(0)
        return self.locate(y, rng) is not None


def _shift_constraints(constraints, y):
    if constraints is None:
        return None
    A, b = constraints
    return A, b - A @ y


def _residual_ok(F, x, tol):
    return all(abs(f.evaluate(x)) < tol * (1 + f.norm()) for f in F)


def validate_component(comp, F, rng, trials=20, tol=1e-6):
    """Check that the component lies on ``V(F)``."""
    if comp.points is not None:
        pts = comp.points
    else:
        pts = [comp(comp.random_parameters(rng)) for _ in range(trials)]
    for x in pts:
        if x.size != F[0].ring.nvars:
            raise ValueError(f"component {comp.id} has {x.size} coordinates, ring has {F[0].ring.nvars}")
        if not _residual_ok(F, x, tol):
            raise ValueError(f"component {comp.id} does not lie on V(F)")


class OracleHandle:
    """Samples generic points on the listed components and evaluates local duals."""

    def __init__(self, components, F, cfg=None, rng=None, validate=True):
        self.cfg = cfg or NumericalConfig()
        self.components = list(components)
        self.F = list(F)
        self.rng = rng if rng is not None else np.random.default_rng(self.cfg.seed)
        ids = [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise ValueError("component ids must be unique")
        if validate:
            for c in self.components:
                validate_component(c, self.F, self.rng, tol=self.cfg.residual_tol)

    def component(self, i):
        for c in self.components:
            if c.id == i:
                return c
        raise KeyError(f"unknown component {i!r}")

    def spawn(self, seed):
        return OracleHandle(self.components, self.F, self.cfg, np.random.default_rng(seed), validate=False)

    def with_components(self, components, F=None):
        return OracleHandle(components, self.F if F is None else F, self.cfg, self.rng, validate=False)

    def translated(self, y):
        """The same oracle in coordinates where ``y`` is the origin."""
        y = as_coords(y)
        F = [f.shift(y) for f in self.F]
        return OracleHandle([c.translated(y) for c in self.components], F, self.cfg, self.rng, validate=False)

    def containing(self, y):
        return [c for c in self.components if c.contains(y, self.rng)]

    def sample_point(self, i, avoid=None, constraints=None):
        if not self.components:
            raise PreconditionError("the oracle has no components to sample")
        comp = self.component(i) if not isinstance(i, ComponentSpec) else i
        if constraints is not None:
            comp = comp.constrained(*constraints)
        if comp.effective_dim < 0:
            raise PreconditionError(f"constraints overdetermine component {comp.id}")
        avoid = None if avoid is None else as_coords(avoid)
        for _ in range(self.cfg.max_samples):
            if comp.points is not None:
                cands = [p for p in comp.points if comp.satisfies_constraints(p)]
                if not cands:
                    break
                x = cands[self.rng.integers(len(cands))]
            else:
                t = comp.solve_constraints(comp.random_parameters(self.rng))
                if t is None:
                    continue
                x = comp(t)
            if not np.all(np.isfinite(x)):
                continue
            if avoid is not None and np.linalg.norm(x - avoid) <= MIN_DISTANCE:
                if comp.points is not None and len(cands) == 1:
                    break
                continue
            return Point(x)
        raise SamplingError(f"could not sample component {comp.id} after {self.cfg.max_samples} attempts")

    def dual_at(self, x, e, suspect=None):
        """``D_x^e`` of the known system; ``x`` must stay away from ``suspect``."""
        x = as_coords(x)
        if suspect is not None and np.linalg.norm(x - as_coords(suspect)) < MIN_DISTANCE:
            raise PreconditionError("dual requested too close to the suspect point")
        return truncated_dual(self.F, x, e, self.cfg)


def component_from_dict(data):
    """Build a :class:`ComponentSpec` from the problem-file representation."""
    from .problem import parse_complex_vector
    cid = str(data.get("id"))
    if "points" in data:
        pts = [parse_complex_vector(p) for p in data["points"]]
        return ComponentSpec(cid, int(data.get("dim", 0)), points=pts)
    param = data["parametrization"]
    dim = int(data.get("dim", 1))
    domain = data.get("domain", {})
    center = complex(*domain["center"]) if "center" in domain else 0.0
    radius = float(domain.get("radius", 1.0))
    return ComponentSpec(cid, dim, parametrization=list(param), center=center, radius=radius)
