"""Deflation ideals in the ring extended by differential-operator coefficients.

The order-``d`` deflation of ``<F>`` adjoins ``q(x^a f_i)`` for ``|a| <= d-1``,
where ``q = sum_{|b| <= d} a_b d^b`` has indeterminate coefficients ``a_b``.
Over a point ``x`` of ``V(F)`` the solutions in ``a`` form ``D_x^d[<F>]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .dual import NumericalConfig, as_coords, check_on_variety
from .poly import Polynomial, Ring, monomials_upto


def _beta_order(n, d):
    # graded-lex ascending: total degree first, then exponent tuples ascending
    return sorted(monomials_upto(n, d), key=lambda b: (sum(b), b))


def _a_name(beta, taken):
    name = "a_" + "_".join(str(b) for b in beta)
    while name in taken:
        name = "_" + name
    return name


@dataclass
class DeflationSystem:
    generators: list
    ring: Ring
    nx: int
    betas: list
    order: int
    n_original: int

    @property
    def a_names(self):
        return self.ring.names[self.nx:]

    def to_strings(self, digits=17):
        return [g.to_string(digits) for g in self.generators]


def deflate(F, d):
    """Generators of the order-``d`` deflation ideal of ``<F>``."""
    if d < 1:
        raise ValueError("deflation order must be at least 1")
    F = list(F)
    if not F:
        raise ValueError("need at least one generator")
    base = F[0].ring
    n = base.nvars
    betas = _beta_order(n, d)
    names = list(base.names)
    for b in betas:
        names.append(_a_name(b, names))
    ring = Ring(tuple(names))
    positions = list(range(n))
    gens = [f.extend(ring, positions) for f in F]
    alphas = _beta_order(n, d - 1)
    for f in F:
        for alpha in alphas:
            h = f * Polynomial.monomial(base, alpha)
            q = Polynomial(ring, {})
            for k, b in enumerate(betas):
                db = h.normalized_derivative(b)
                if db.is_zero():
                    continue
                a = Polynomial.variable(ring, n + k)
                q = q + db.extend(ring, positions) * a
            gens.append(q)
    return DeflationSystem(gens, ring, n, betas, d, len(F))


def fiber_matrix(system, x):
    """Rows: the extra deflation generators at ``x``, as linear forms in the ``a`` variables."""
    x = as_coords(x)
    nx = system.nx
    extra = system.generators[system.n_original:]
    m = np.zeros((len(extra), len(system.betas)), dtype=complex)
    for r, g in enumerate(extra):
        for expo, c in g.terms.items():
            a_part = expo[nx:]
            if sum(a_part) != 1:
                raise ValueError("deflation generator is not linear in the a variables")
            k = a_part.index(1)
            m[r, k] += c * np.prod(x ** np.array(expo[:nx]))
    return m


def fiber_dual_dim(F, x, d, cfg=None):
    """Dimension of the fibre of the order-``d`` deflation over ``x`` (``= dim D_x^d``)."""
    cfg = cfg or NumericalConfig()
    check_on_variety(F, x, cfg.residual_tol)
    system = deflate(F, d)
    ker, _ = linalg.kernel(fiber_matrix(system, x), cfg.delta, len(system.betas))
    return ker.shape[0]
