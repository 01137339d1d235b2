"""Interpolating low-degree elements of an isolated primary component.

Each sample contributes the full local dual of ``I + L`` at a generic point
``x`` of the component, where ``L`` is a random affine plane through ``x`` of
codimension ``dim V``; this pins down the scheme structure transverse to the
component.  Samples are added until the constraint rank stops growing.
"""

from __future__ import annotations

from math import comb

import numpy as np

from . import linalg
from .dual import LocalDual, NumericalConfig, functional_rows_on_monomials
from .embedded import TruncationSpace
from .errors import InconclusiveError, SamplingError
from .oracle import random_circle
from .poly import Polynomial, monomials_upto


def _slice(x, k, rng, ring):
    n = x.size
    A = random_circle(rng, (k, n))
    b = A @ x
    planes = []
    for j in range(k):
        terms = {tuple(int(m == i) for m in range(n)): A[j, i] for i in range(n)}
        terms[(0,) * n] = -b[j]
        planes.append(Polynomial(ring, terms))
    return planes


def local_scheme_dual(F, x, cfg):
    """Orthonormal basis of the whole dual of a 0-dimensional local scheme at ``x``."""
    L = LocalDual(F, x, cfg)
    for k in range(1, cfg.max_degree + 1):
        if L.dim(k) == L.dim(k - 1):
            return L.compute(k - 1), k - 1
    raise InconclusiveError(f"local dual at a sample did not stabilize by order {cfg.max_degree}")


def interpolate_isolated(h, i, e, cfg=None):
    """Basis of the degree-``<= e`` part of the primary component along component ``i``."""
    cfg = cfg or NumericalConfig()
    comp = h.component(i)
    ring = h.F[0].ring
    n = ring.nvars
    monos = monomials_upto(n, e)
    blocks = []
    rank = 0
    for _ in range(cfg.max_samples):
        x = h.sample_point(comp).coords
        Fx = list(h.F) + (_slice(x, comp.effective_dim, h.rng, ring) if comp.effective_dim else [])
        V, order = local_scheme_dual(Fx, x, cfg)
        blocks.append(functional_rows_on_monomials(V, monomials_upto(n, order), x, monos))
        K, info = linalg.kernel(np.vstack(blocks), cfg.delta, len(monos))
        new_rank = len(monos) - K.shape[0]
        # one extra sample without a rank increase, or nothing left to cut
        if new_rank == rank or K.shape[0] == 0:
            return TruncationSpace(K, monos, ring, e, float("inf"), certified=True)
        rank = new_rank
    raise SamplingError(f"constraint rank did not stabilize within {cfg.max_samples} samples")


def dual_dims_of_truncated_ideal(T, y, k, cfg=None):
    """``dim D_y^j[<T>]`` for ``j = 0..k``; the zero ideal gives binomial counts."""
    cfg = cfg or NumericalConfig()
    polys = [p for p in T.basis if p.norm() > 0] if isinstance(T, TruncationSpace) else list(T)
    if not polys:
        n = T.ring.nvars if isinstance(T, TruncationSpace) else len(y)
        return [comb(j + n, n) for j in range(k + 1)]
    return LocalDual(polys, y, cfg).dims(k)
