"""Colon ideals through the dual action ``g . D`` and the local membership test."""

from __future__ import annotations

import numpy as np

from . import linalg
from .dual import (
    DualBasis,
    GradedDual,
    LocalDual,
    NumericalConfig,
    as_coords,
    multiplication_matrix,
    reduce_basis,
)
from .errors import InconclusiveError
from .poly import Polynomial, monomials_upto


def _scale(rows, M):
    # size of ``rows @ M.T`` when nothing cancels
    if rows.size == 0 or M.size == 0:
        return 0.0
    return float(np.linalg.norm(rows, 2) * np.linalg.norm(M, 2))


def colon_dual(B, g, cfg=None):
    """Reduced basis of ``span{g . q : q in B}`` (functionals at the origin).

    Always a subspace of the truncated dual of ``I : g`` of order
    ``B.order - g.order()``; equal to it when ``B`` is the dual of a
    homogeneous ideal and ``g`` is homogeneous.
    """
    cfg = cfg or NumericalConfig()
    if np.any(as_coords(B.point) != 0):
        raise ValueError("colon_dual works with functionals at the origin")
    if g.is_zero():
        k = B.order
        return DualBasis(np.zeros((0, len(B.monomials)), dtype=complex), B.monomials, B.point, k, True,
                         B.homogenized, {"pivots": []})
    k = max(B.order - g.order(), 0)
    dst = monomials_upto(len(B.point), k, B.homogenized)
    M = multiplication_matrix(g, B.monomials, dst)
    rows = B.coeffs @ M.T
    V, _ = linalg.span(rows, cfg.delta, _scale(B.coeffs, M))
    out = DualBasis(V, dst, B.point, k, homogenized=B.homogenized)
    if V.shape[0] == 0:
        out.reduced = True
        out.meta["pivots"] = []
        return out
    return reduce_basis(out, cfg.pivot_tol)


class HomogenizedColon:
    """Degree-by-degree standard monomials and g-corners of ``<F^h> : <g^h>``.

    ``F`` must already be centred at the point of interest.
    """

    def __init__(self, graded, g, cfg=None):
        self.cfg = cfg or NumericalConfig()
        self.graded = graded
        self.gh = g.homogenize()
        self.e = self.gh.degree()
        self.n = graded.n
        self._prev_in = set()
        self.degree = -1
        self.corners = []

    def piece(self, d):
        """Orthonormal rows spanning the degree-``d`` part of ``g^h . D_0^{d+e}[<F^h>]``."""
        src = self.graded.monomials(d + self.e)
        dst = self.graded.monomials(d)
        P = self.graded.piece(d + self.e)
        M = multiplication_matrix(self.gh, src, dst)
        V, _ = linalg.span(P @ M.T, self.cfg.delta, _scale(P, M))
        return V, dst

    def standard_monomials(self, d):
        V, dst = self.piece(d)
        if V.shape[0] == 0:
            return []
        piv = linalg.pivot_columns(V, list(range(len(dst) - 1, -1, -1)), self.cfg.pivot_tol)
        return [dst[j] for j in piv]

    def advance(self):
        """Process the next degree; return the g-corners that first appear there."""
        d = self.degree + 1
        std = set(self.standard_monomials(d))
        in_d = [m for m in self.graded.monomials(d) if m not in std]
        new = []
        for m in in_d:
            below = [m[:j] + (m[j] - 1,) + m[j + 1:] for j in range(self.n) if m[j]]
            if not any(b in self._prev_in for b in below):
                new.append(m)
        self._prev_in = set(in_d)
        self.corners.extend(new)
        self.degree = d
        return new


def _centre(F, g, y):
    if y is None:
        return list(F), g
    y = as_coords(y)
    return [f.shift(y) for f in F], g.shift(y)


def ideal_membership(F, g, cfg=None, y=None):
    """Decide ``g in <F> R_y`` (localization at ``y``, the origin by default).

    Alternates two tests per degree ``d``: the truncated duals of ``I`` and
    ``I + <g>`` differ (``g`` is not a member), or ``h^d`` is not a standard
    monomial of the homogenized colon ideal (``g`` is a member).
    """
    cfg = cfg or NumericalConfig()
    F, g = _centre(F, g, y)
    if g.is_zero():
        return True
    n = F[0].ring.nvars
    origin = np.zeros(n)
    L1 = LocalDual(F, origin, cfg)
    L2 = LocalDual(F + [g], origin, cfg, check=False)
    colon = HomogenizedColon(GradedDual([f.homogenize() for f in F if not f.is_zero()], cfg), g, cfg)
    hpow = lambda d: (0,) * n + (d,)
    for d in range(cfg.max_degree + 1):
        if L1.dim(d) != L2.dim(d):
            return False
        if hpow(d) not in colon.standard_monomials(d):
            return True
    raise InconclusiveError(f"membership undecided up to degree {cfg.max_degree}")


def is_member(F, g, cfg=None, y=None):
    """Like :func:`ideal_membership` but ``None`` instead of raising when undecided."""
    try:
        return ideal_membership(F, g, cfg, y)
    except InconclusiveError:
        return None


__all__ = ["colon_dual", "ideal_membership", "HomogenizedColon", "Polynomial"]
