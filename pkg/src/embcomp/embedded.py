"""Deciding whether a suspect point (or a sliced positive-dimensional suspect) is embedded.

Coordinates are centred at the suspect, so ``I = <F>`` is studied in the
local ring at the origin and ``J`` is the intersection of the primary
components of ``I`` along the oracle's components through the origin.

* ``J_d^e``: polynomials of degree at most ``d`` killed by ``D_x^e`` at
  generic points ``x`` of every component.  Decreasing in ``e``, eventually
  equal to ``J_d = J`` intersected with degree ``<= d``.
* ``g`` is certified to lie in ``J`` once ``I : g`` is seen to be
  zero-dimensional, i.e. the colon staircase has a pure power of every variable.
* The origin is embedded iff some ``J_d`` has an initial term that is a
  standard monomial of ``I``; it is not embedded iff ``l . D_0^{d+1}[I]``
  reaches every s-corner of ``in(I)`` for a generic linear form ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .colon import HomogenizedColon, colon_dual, ideal_membership
from .dual import (
    GradedDual,
    LocalDual,
    NumericalConfig,
    as_coords,
    check_on_variety,
    functional_rows_on_monomials,
)
from .errors import InconclusiveError, PreconditionError
from .oracle import ComponentSpec, random_circle
from .poly import Polynomial, monomials_upto
from .staircase import gcorners


@dataclass
class TruncationSpace:
    """Polynomials of degree ``<= d`` given by coefficient rows over ``monomials``."""

    coeffs: np.ndarray
    monomials: tuple
    ring: object
    d: int
    e: float
    certified: bool = False
    warnings: list = field(default_factory=list)

    @property
    def dim(self):
        return self.coeffs.shape[0]

    @property
    def basis(self):
        return [Polynomial(self.ring, dict(zip(self.monomials, row))) for row in self.coeffs]

    def reduced(self, tol=1e-6):
        """Echelon rows with unit leading coefficients at their initial terms."""
        if self.dim == 0:
            return self.coeffs, []
        red, piv = linalg.reduce_rows(self.coeffs, list(range(len(self.monomials))), tol)
        return red, [self.monomials[j] for j in piv]

    def initial_terms(self, tol=1e-6):
        return self.reduced(tol)[1]

    def random_element(self, rng):
        if self.dim == 0:
            return Polynomial(self.ring, {})
        w = rng.standard_normal(self.dim) + 1j * rng.standard_normal(self.dim)
        v = w @ self.coeffs
        v = v / np.linalg.norm(v)
        return Polynomial(self.ring, dict(zip(self.monomials, v)))

    def contains(self, f, tol=1e-8):
        """Whether ``f`` lies in the span (relative residual below ``tol``)."""
        v = np.array([f.coefficient(m) for m in self.monomials])
        if self.dim == 0:
            return bool(np.linalg.norm(v) <= tol)
        c = np.linalg.lstsq(self.coeffs.T, v, rcond=None)[0]
        return bool(np.linalg.norm(self.coeffs.T @ c - v) <= tol * max(1.0, np.linalg.norm(v)))


@dataclass
class EmbeddedVerdict:
    verdict: bool
    certificate_type: str
    witness_poly: Polynomial = None
    covered_scorners: list = None
    degrees: dict = field(default_factory=dict)
    point: np.ndarray = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.certificate_type == "witness" and not self.verdict:
            raise ValueError("a witness certifies an embedded component")
        if self.certificate_type == "coverage" and self.verdict:
            raise ValueError("s-corner coverage certifies a pseudocomponent")

    def to_json(self, names=None):
        out = {"verdict": self.verdict, "certificate_type": self.certificate_type}
        if self.witness_poly is not None:
            out["witness_poly"] = self.witness_poly.chop().to_string()
        if self.covered_scorners is not None:
            out["covered_scorners"] = [_mono_str(a, names) for a in self.covered_scorners]
        out["degrees"] = dict(self.degrees)
        if self.point is not None:
            out["point"] = [[float(z.real), float(z.imag)] for z in self.point]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _mono_str(alpha, names=None):
    names = names or [f"x{k + 1}" for k in range(len(alpha))]
    parts = [n if a == 1 else f"{n}^{a}" for n, a in zip(names, alpha) if a]
    return "*".join(parts) or "1"


def double_truncation(h, d, e, cfg=None, components=None):
    """``J_d^e`` for the components of ``h`` (all through the origin)."""
    cfg = cfg or NumericalConfig()
    comps = h.components if components is None else components
    n = h.F[0].ring.nvars
    ring = h.F[0].ring
    monos = monomials_upto(n, d)
    dual_monos = monomials_upto(n, e)
    origin = np.zeros(n)
    blocks = []
    dim = len(monos)
    K = np.eye(dim, dtype=complex)
    warnings = []
    for _ in range(len(monos) + 2):
        for c in comps:
            x = h.sample_point(c, avoid=origin).coords
            V = LocalDual(h.F, x, cfg).compute(e)
            blocks.append(functional_rows_on_monomials(V, dual_monos, x, monos))
        if not blocks:
            break
        K, info = linalg.kernel(np.vstack(blocks), cfg.delta, len(monos))
        if info.ill_conditioned:
            warnings.append(f"J_{d}^{e}: singular values straddle the threshold")
        if K.shape[0] == dim:
            break
        dim = K.shape[0]
    return TruncationSpace(K, monos, ring, d, e, warnings=warnings)


def _colon_zero_dim(corners, n):
    covered = set()
    for m in corners:
        support = [j for j in range(n) if m[j]]
        if not support:
            return True
        if len(support) == 1:
            covered.add(support[0])
    return len(covered) == n


def witness_search(F, g, c, cfg=None, graded=None):
    """Run the colon-corner loop up to cutoff ``c``; return ``(certified, degree, corners)``."""
    cfg = cfg or NumericalConfig()
    if g.is_zero():
        return True, 0, [()]
    if graded is None:
        graded = GradedDual([f.homogenize() for f in F if not f.is_zero()], cfg)
    n = F[0].ring.nvars
    colon = HomogenizedColon(graded, g, cfg)
    for d in range(c + 1):
        colon.advance()
        corners = [m[:-1] for m in colon.corners]
        if _colon_zero_dim(corners, n):
            return True, d, corners
    return False, c, [m[:-1] for m in colon.corners]


def is_witness_polynomial(F, g, c, cfg=None, graded=None):
    """True when ``I : g`` is seen to be zero-dimensional within degree ``c`` (so ``g`` is in ``J``)."""
    return witness_search(F, g, c, cfg, graded)[0]


def ideal_truncation(F, h, d, cfg=None, graded=None, rng=None):
    """``J_d``: raise ``e`` until a random element of ``J_d^e`` is certified to lie in ``J``."""
    cfg = cfg or NumericalConfig()
    rng = rng if rng is not None else h.rng
    if graded is None:
        graded = GradedDual([f.homogenize() for f in F if not f.is_zero()], cfg)
    for e in range(cfg.max_e + 1):
        T = double_truncation(h, d, e, cfg)
        g = T.random_element(rng)
        if is_witness_polynomial(F, g, e, cfg, graded):
            T.certified = True
            return T
    raise InconclusiveError(f"J_{d} not certified up to e = {cfg.max_e}")


def is_origin_embedded(F, h, cfg=None):
    """Decide whether the origin carries an embedded component of ``<F>``."""
    cfg = cfg or NumericalConfig()
    F = [f for f in F if not f.is_zero()]
    n = F[0].ring.nvars
    origin = np.zeros(n)
    check_on_variety(F, origin, cfg.residual_tol)
    st = gcorners(F, origin, cfg)
    ideal = st.ideal
    sc = ideal.scorners()
    rng = h.rng
    ell = Polynomial(F[0].ring, {tuple(int(k == j) for k in range(n)): c
                                 for j, c in enumerate(random_circle(rng, n))})
    local = LocalDual(F, origin, cfg, check=False)
    graded = GradedDual([f.homogenize() for f in F], cfg)
    notes = [] if st.certified else ["staircase of in(I) not certified complete"]
    for d in range(cfg.max_d + 1):
        J = ideal_truncation(F, h, d, cfg, graded, rng)
        red, inits = J.reduced(cfg.pivot_tol)
        witness = _witness_in(J, red, inits, ideal, F, cfg, rng)
        if witness is not None:
            g, how = witness
            return EmbeddedVerdict(True, "witness", witness_poly=g,
                                   degrees={"d": d, "e": J.e, "witness_degree": g.degree()},
                                   notes=notes + [f"witness certified by {how}"])
        S = colon_dual(local.basis(d + 1), ell, cfg)
        init_S = set(S.initial_terms())
        covered = [a for a in sc if a in init_S]
        if len(covered) == len(sc):
            return EmbeddedVerdict(False, "coverage", covered_scorners=covered,
                                   degrees={"d": d, "e": J.e}, notes=notes)
    raise InconclusiveError(f"no verdict up to d = {cfg.max_d}")


def _witness_in(J, red, inits, ideal, F, cfg, rng):
    """An element of ``J_d`` outside ``I``, with the test that certified it."""
    for row, m in zip(red, inits):
        if m not in ideal:
            return Polynomial(F[0].ring, dict(zip(J.monomials, row))), "initial term"
    if J.dim == 0:
        return None
    # initial terms can all lie in in(I) while J_d does not lie in I
    g = J.random_element(rng)
    try:
        member = ideal_membership(F, g, cfg)
    except InconclusiveError:
        return None
    return None if member else (g, "membership")


def _jacobian_rank(F, y, delta):
    n = F[0].ring.nvars
    rows = []
    for f in F:
        rows.append([f.normalized_derivative(tuple(int(k == j) for k in range(n))).evaluate(y)
                     for j in range(n)])
    s = np.linalg.svd(np.array(rows, dtype=complex), compute_uv=False)
    return linalg.numerical_rank(s, delta).rank


def is_point_embedded(F, y, h, cfg=None):
    """Translate ``y`` to the origin and run :func:`is_origin_embedded` there."""
    cfg = cfg or NumericalConfig()
    y = as_coords(y)
    check_on_variety(F, y, cfg.residual_tol)
    ht = h.translated(y)
    origin = np.zeros(y.size)
    through = []
    for c in ht.containing(origin):
        if c.effective_dim == 0 and c.points is not None and all(np.linalg.norm(p) < 1e-6 for p in c.points):
            continue
        if c.effective_dim > 0:
            through.append(c)
    if not through:
        raise PreconditionError("no listed positive-dimensional component passes through the suspect point")
    n = y.size
    top = max(c.effective_dim for c in through)
    if len(through) == 1 and _jacobian_rank(F, y, cfg.delta) == n - top:
        raise PreconditionError(f"suspect point is a smooth point of component {through[0].id}")
    Ft = [f.shift(y) for f in F]
    verdict = is_origin_embedded(Ft, ht.with_components(through, Ft), cfg)
    if verdict.witness_poly is not None:
        verdict.witness_poly = verdict.witness_poly.shift(-y)
    verdict.point = y
    return verdict


def slice_suspect(F, suspect, h, cfg=None):
    """Cut a ``k``-dimensional suspect by a random affine plane of codimension ``k``.

    ``suspect`` is a :class:`ComponentSpec` with a parametrization.  Returns
    ``(F', y', h')``: the sliced system, a generic point of the suspect on the
    slice and the sliced oracle.
    """
    cfg = cfg or NumericalConfig()
    k = suspect.effective_dim
    if k < 1:
        raise PreconditionError("0-dimensional suspect: use is_point_embedded directly")
    if suspect.parametrization is None:
        raise PreconditionError("slicing needs a parametrized suspect component")
    rng = h.rng
    p = h.sample_point(suspect).coords
    n = p.size
    A = random_circle(rng, (k, n))
    b = A @ p
    ring = F[0].ring
    planes = []
    for j in range(k):
        terms = {tuple(int(m == i) for m in range(n)): A[j, i] for i in range(n)}
        terms[(0,) * n] = -b[j]
        planes.append(Polynomial(ring, terms))
    Fs = list(F) + planes
    comps = []
    for c in h.components:
        if c.id == suspect.id:
            continue
        if c.effective_dim > k:
            comps.append(c.constrained(A, b))
        elif c.effective_dim == k and c.parametrization is not None:
            pts = _slice_points(c.constrained(A, b), rng)
            if pts:
                comps.append(ComponentSpec(c.id, 0, points=pts))
    return Fs, p, h.with_components(comps, Fs)


def _slice_points(comp, rng, starts=10):
    pts = []
    for _ in range(starts):
        t = comp.solve_constraints(comp.random_parameters(rng))
        if t is None:
            continue
        x = comp(t)
        if np.all(np.isfinite(x)) and not any(np.linalg.norm(x - q) < 1e-6 for q in pts):
            pts.append(x)
    return pts
