"""Truncated Macaulay dual spaces.

A functional ``sum c_a d^a[y]`` is stored as a coefficient vector over an
ordered monomial list (primal order, ``1`` first).  ``d^a[y]`` applies the
normalized derivative ``(1/a!) d^|a|/dx^a`` and evaluates at ``y``, so
``<d^a, x^a> = 1``.

:class:`LocalDual` grows ``D_y^k[I]`` one order at a time: a candidate of
order ``k`` must vanish on the generators and every ``x_j . q`` must lie in
the already computed ``D_y^{k-1}[I]``.  :class:`GradedDual` is the same loop
for homogeneous generators at the origin, where each degree is computed on
its own.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import NotOnVarietyError, RingMismatchError
from .poly import Polynomial, monomials_of_degree, monomials_upto, multinomial_shift


@dataclass
class NumericalConfig:
    delta: float = 1e-8
    seed: int = 0
    max_degree: int = 12
    max_d: int = 10
    max_e: int = 10
    max_samples: int = 50
    residual_tol: float = 1e-6
    pivot_tol: float = 1e-6
    max_retries: int = 3

    def __post_init__(self):
        if not self.delta > 0:
            raise ValueError("delta must be positive")

    def replace(self, **kw):
        d = dict(self.__dict__)
        d.update({k: v for k, v in kw.items() if v is not None})
        return NumericalConfig(**d)


@dataclass
class Point:
    coords: np.ndarray
    eps: float = 0.0

    def __post_init__(self):
        self.coords = np.asarray(self.coords, dtype=complex).ravel()
        if not np.isfinite(self.eps):
            raise ValueError("error bound must be finite")

    def __len__(self):
        return self.coords.size


def as_coords(y):
    if isinstance(y, Point):
        return y.coords
    return np.asarray(y, dtype=complex).ravel()


def check_on_variety(F, y, tol):
    y = as_coords(y)
    for k, f in enumerate(F):
        if f.ring.nvars != y.size:
            raise RingMismatchError(f"point has {y.size} coordinates, ring has {f.ring.nvars}")
        r = abs(f.evaluate(y))
        if r >= tol * (1 + f.norm()):
            raise NotOnVarietyError(f"generator {k} has residual {r:.3g} at the basepoint")


class DualFunctional:
    """A finite combination of normalized partials at a basepoint."""

    def __init__(self, terms, point):
        self.terms = {tuple(a): complex(c) for a, c in terms.items() if c != 0}
        self.point = as_coords(point)

    @property
    def order(self):
        return max((sum(a) for a in self.terms), default=-1)

    def __call__(self, f):
        return apply(self, f)

    def __repr__(self):
        body = " + ".join(f"{c:.4g}*d{a}" for a, c in sorted(self.terms.items(), key=lambda t: sum(t[0])))
        return f"DualFunctional({body or '0'})"


def apply(q, f):
    if len(q.point) != f.ring.nvars:
        raise RingMismatchError(f"functional lives in {len(q.point)} variables, polynomial in {f.ring.nvars}")
    g = f.shift(q.point) if np.any(q.point != 0) else f
    return complex(sum(c * g.coefficient(a) for a, c in q.terms.items()))


def differentiate(q, i):
    """The action ``x_i . q`` (so that ``(x_i . q)(f) == q(x_i * f)``)."""
    n = len(q.point)
    if not 0 <= i < n:
        raise IndexError(f"variable index {i} out of range")
    out = {}
    for a, c in q.terms.items():
        if a[i] > 0:
            b = a[:i] + (a[i] - 1,) + a[i + 1:]
            out[b] = out.get(b, 0) + c
    return DualFunctional(out, q.point)


def multiply(q, g):
    """The action ``g . q`` at the origin: ``(g . q)(f) == q(g * f)``."""
    out = {}
    for b, gb in g.terms.items():
        for a, c in q.terms.items():
            if all(x >= y for x, y in zip(a, b)):
                ab = tuple(x - y for x, y in zip(a, b))
                out[ab] = out.get(ab, 0) + gb * c
    return DualFunctional(out, q.point)


@dataclass
class DualBasis:
    """Rows of ``coeffs`` are functionals over ``monomials`` (primal order, largest first)."""

    coeffs: np.ndarray
    monomials: tuple
    point: np.ndarray
    order: int
    reduced: bool = False
    homogenized: bool = False
    meta: dict = field(default_factory=dict)

    @property
    def dim(self):
        return self.coeffs.shape[0]

    def __len__(self):
        return self.dim

    def functionals(self, tol=0.0):
        out = []
        for row in self.coeffs:
            out.append(DualFunctional({a: c for a, c in zip(self.monomials, row) if abs(c) > tol}, self.point))
        return out

    def dual_order(self):
        """Column indices from the largest functional in the dual order to the smallest."""
        return list(range(len(self.monomials) - 1, -1, -1))

    def initial_terms(self, tol=1e-6):
        if self.dim == 0:
            return []
        if self.reduced:
            idx = self.meta["pivots"]
        else:
            idx = linalg.pivot_columns(linalg.span(self.coeffs, 1e-12)[0], self.dual_order(), tol)
        return [self.monomials[j] for j in idx]


def reduce_basis(B, tol=1e-6):
    """Same span, distinct initial terms, unit leading coefficients."""
    red, piv = linalg.reduce_rows(B.coeffs, B.dual_order(), tol)
    order = np.argsort([B.dual_order().index(p) for p in piv], kind="stable")
    red = red[order]
    piv = [piv[k] for k in order]
    meta = dict(B.meta)
    meta["pivots"] = piv
    return DualBasis(red, B.monomials, B.point, B.order, True, B.homogenized, meta)


def basis_from_functionals(functionals, k=None):
    """Pack functionals into a :class:`DualBasis` over all monomials up to the max order."""
    point = functionals[0].point
    n = len(point)
    if k is None:
        k = max(q.order for q in functionals)
    monos = monomials_upto(n, max(k, 0))
    index = {a: j for j, a in enumerate(monos)}
    coeffs = np.zeros((len(functionals), len(monos)), dtype=complex)
    for r, q in enumerate(functionals):
        for a, c in q.terms.items():
            coeffs[r, index[a]] = c
    return DualBasis(coeffs, monos, point, k)


def _shift_matrix(src, dst, j):
    """Matrix of ``x_j .`` from functionals over ``src`` to functionals over ``dst``."""
    index = {a: r for r, a in enumerate(dst)}
    m = np.zeros((len(dst), len(src)))
    for c, a in enumerate(src):
        if a[j] > 0:
            b = a[:j] + (a[j] - 1,) + a[j + 1:]
            r = index.get(b)
            if r is not None:
                m[r, c] = 1.0
    return m


def taylor_rows(F, y, monos):
    """Row ``k`` holds ``d^a[y](f_k)`` for every monomial ``a`` in ``monos``."""
    y = as_coords(y)
    rows = np.zeros((len(F), len(monos)), dtype=complex)
    for k, f in enumerate(F):
        g = f.shift(y) if np.any(y != 0) else f
        for j, a in enumerate(monos):
            rows[k, j] = g.coefficient(a)
    return rows


class LocalDual:
    """Incremental computation of ``D_y^k[<F>]`` for growing ``k``."""

    def __init__(self, F, y, cfg=None, check=True):
        self.cfg = cfg or NumericalConfig()
        self.F = list(F)
        if not self.F:
            raise ValueError("need at least one generator")
        self.n = self.F[0].ring.nvars
        self.y = as_coords(y)
        if check:
            check_on_variety(self.F, self.y, self.cfg.residual_tol)
        self.homogenized = self.F[0].ring.homogenized
        shifted = [f.shift(self.y) if np.any(self.y != 0) else f for f in self.F]
        # unit coefficient norm, so truncated Taylor rows keep their true size
        self._shifted = [f / f.norm() for f in shifted if not f.is_zero()]
        self.bases = [np.ones((1, 1), dtype=complex)]
        self.warnings = []

    def _monos(self, k):
        return monomials_upto(self.n, k, self.homogenized)

    def _step(self):
        i = len(self.bases)
        cols = self._monos(i)
        prev = self._monos(i - 1)
        rows = [taylor_rows(self._shifted, np.zeros(self.n), cols)]
        ann = linalg.complement(self.bases[-1], len(prev))
        if ann.shape[0]:
            for j in range(self.n):
                rows.append(ann @ _shift_matrix(cols, prev, j))
        a = np.vstack(rows)
        ker, info = linalg.kernel(a, self.cfg.delta, len(cols), normalize=False, scale=1.0)
        if info.ill_conditioned:
            self.warnings.append(f"order {i}: singular values straddle the threshold")
        self.bases.append(ker)

    def compute(self, k):
        while len(self.bases) <= k:
            self._step()
        return self.bases[k]

    def dims(self, k):
        self.compute(k)
        return [b.shape[0] for b in self.bases[: k + 1]]

    def dim(self, k):
        if k < 0:
            return 0
        return self.compute(k).shape[0]

    def basis(self, k, reduce=True):
        V = self.compute(k)
        B = DualBasis(V.copy(), self._monos(k), self.y, k, homogenized=self.homogenized,
                      meta={"warnings": list(self.warnings), "dims": self.dims(k)})
        return reduce_basis(B, self.cfg.pivot_tol) if reduce else B


def truncated_dual(F, y, k, cfg=None):
    """Reduced basis of ``D_y^k[<F>]``."""
    if k < 0:
        raise ValueError("truncation order must be non-negative")
    return LocalDual(F, y, cfg).basis(k)


class GradedDual:
    """Homogeneous pieces of ``D_0[<F>]`` for homogeneous generators ``F``.

    ``piece(i)`` is an orthonormal basis (rows) of the degree-``i`` functionals;
    ``D_0^k`` is the direct sum of pieces ``0..k``.
    """

    def __init__(self, F, cfg=None):
        self.cfg = cfg or NumericalConfig()
        self.F = [f for f in F if not f.is_zero()]
        if not F:
            raise ValueError("need at least one generator")
        for f in self.F:
            if not f.is_homogeneous():
                raise ValueError(f"generator {f} is not homogeneous")
        self.ring = F[0].ring
        self.n = self.ring.nvars
        self.homogenized = self.ring.homogenized
        self.pieces = []
        self.warnings = []

    def monomials(self, i):
        return monomials_of_degree(self.n, i, self.homogenized)

    def _step(self):
        i = len(self.pieces)
        cols = self.monomials(i)
        gens = [f for f in self.F if f.degree() == i]
        rows = [taylor_rows(gens, np.zeros(self.n), cols)] if gens else []
        if i > 0:
            prev = self.monomials(i - 1)
            ann = linalg.complement(self.pieces[-1], len(prev))
            if ann.shape[0]:
                for j in range(self.n):
                    rows.append(ann @ _shift_matrix(cols, prev, j))
        if rows:
            ker, info = linalg.kernel(np.vstack(rows), self.cfg.delta, len(cols))
            if info.ill_conditioned:
                self.warnings.append(f"degree {i}: singular values straddle the threshold")
        else:
            ker = np.eye(len(cols), dtype=complex)
        self.pieces.append(ker)

    def piece(self, i):
        while len(self.pieces) <= i:
            self._step()
        return self.pieces[i]

    def dims(self, k):
        return [self.piece(i).shape[0] for i in range(k + 1)]

    def reduced_piece(self, i):
        """Reduced basis of piece ``i`` and the monomials that are its initial terms."""
        V = self.piece(i)
        monos = self.monomials(i)
        if V.shape[0] == 0:
            return V, []
        order = list(range(len(monos) - 1, -1, -1))
        red, piv = linalg.reduce_rows(V, order, self.cfg.pivot_tol)
        return red, [monos[j] for j in piv]

    def standard_monomials(self, i):
        return self.reduced_piece(i)[1]


def multiplication_matrix(g, src, dst):
    """Matrix of ``g .`` (at the origin) from functionals over ``src`` to ``dst``."""
    index = {a: r for r, a in enumerate(dst)}
    m = np.zeros((len(dst), len(src)), dtype=complex)
    for beta, gb in g.terms.items():
        for c, a in enumerate(src):
            if all(x >= y for x, y in zip(a, beta)):
                r = index.get(tuple(x - y for x, y in zip(a, beta)))
                if r is not None:
                    m[r, c] += gb
    return m


def functional_rows_on_monomials(V, monos, point, targets):
    """Matrix ``M[r, t] = q_r(x^targets[t])`` for functionals ``q_r`` at ``point``.

    ``targets`` are exponents of monomials in the *same* coordinates as ``point``.
    """
    point = as_coords(point)
    out = np.zeros((V.shape[0], len(targets)), dtype=complex)
    for t, gamma in enumerate(targets):
        col = np.zeros(len(monos), dtype=complex)
        for j, a in enumerate(monos):
            m = multinomial_shift(gamma, a)
            if m:
                col[j] = m * np.prod(point ** (np.array(gamma) - np.array(a)))
        out[:, t] = V @ col
    return out


def functional_from_vector(vec, monos, point, tol=0.0):
    return DualFunctional({a: c for a, c in zip(monos, vec) if abs(c) > tol}, point)


def zero_ideal_dims(n, k):
    from math import comb
    return [comb(i + n, n) for i in range(k + 1)]


__all__ = [
    "NumericalConfig", "Point", "DualFunctional", "DualBasis", "LocalDual", "GradedDual",
    "apply", "differentiate", "multiply", "truncated_dual", "reduce_basis",
    "basis_from_functionals", "Polynomial",
]
