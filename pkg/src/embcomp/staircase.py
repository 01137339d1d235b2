"""Local Hilbert function, g-corners and s-corners of ``in(I)`` at a point.

The initial ideal is read off the homogenized system: at each degree ``k`` the
initial terms of a reduced basis of the degree-``k`` dual piece of ``<F^h>``
are exactly the standard monomials, so the remaining monomials are those of
``in<F^h>``.  Dehomogenizing the minimal generators found so far gives
generators of ``in(I)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .dual import GradedDual, LocalDual, NumericalConfig, as_coords, check_on_variety
from .errors import IncompleteStaircaseError
from .poly import monomials_of_degree


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimalize(monos):
    """Minimal generators of the monomial ideal generated by ``monos``."""
    monos = sorted(set(tuple(m) for m in monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return out


class MonomialIdeal:
    def __init__(self, gens, n):
        self.n = n
        self.gens = minimalize(gens)

    def __contains__(self, m):
        return any(divides(g, m) for g in self.gens)

    def standard_monomials(self, k):
        return [m for m in monomials_of_degree(self.n, k) if m not in self]

    def hilbert(self, k):
        return len(self.standard_monomials(k))

    def dimension(self):
        """Largest number of variables spanning a coordinate subspace missed by every generator."""
        for size in range(self.n, -1, -1):
            for S in itertools.combinations(range(self.n), size):
                if not any(all(g[j] == 0 for j in range(self.n) if j not in S) for g in self.gens):
                    return size
        return 0

    def is_zero_dimensional(self):
        pure = set()
        for g in self.gens:
            support = [j for j in range(self.n) if g[j]]
            if len(support) <= 1:
                pure.update(support if support else range(self.n))
        return len(pure) == self.n

    def max_exponents(self):
        return [max((g[j] for g in self.gens), default=0) for j in range(self.n)]

    def scorners(self, bound=None):
        top = self.max_exponents()
        if not self.gens or min(top) == 0:
            return []
        out = []
        for alpha in itertools.product(*[range(t) for t in top]):
            if bound is not None and sum(alpha) > bound:
                continue
            if alpha in self:
                continue
            if all(alpha[:j] + (alpha[j] + 1,) + alpha[j + 1:] in self for j in range(self.n)):
                out.append(alpha)
        return sorted(out, key=lambda m: (sum(m), m))


@dataclass
class Staircase:
    gcorners: list
    n: int
    degree: int = 0
    certified: bool = False
    homogenized_corners: list = field(default_factory=list)

    @property
    def ideal(self):
        return MonomialIdeal(self.gcorners, self.n)

    def __contains__(self, m):
        return m in self.ideal

    def is_standard(self, m):
        return m not in self.ideal


@dataclass
class HilbertData:
    values: list
    regularity: int
    multiplicity: int
    dimension: int
    hp_coefficients: list
    regularity_is_lower_bound: bool = False


def hilbert_values(F, y, k, cfg=None):
    L = LocalDual(F, y, cfg)
    dims = L.dims(k)
    return [dims[0]] + [dims[i] - dims[i - 1] for i in range(1, k + 1)]


def hilbert_function(F, y, k, cfg=None):
    """``dim D_y^k - dim D_y^{k-1}``."""
    return hilbert_values(F, y, k, cfg)[k]


def _translated(F, y):
    y = as_coords(y)
    if y.size and any(y != 0):
        return [f.shift(y) for f in F]
    return list(F)


def gcorners(F, y=None, cfg=None):
    """Minimal generators of ``in(I)`` at ``y``; raises when ``cfg.max_degree`` is hit."""
    cfg = cfg or NumericalConfig()
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("need at least one nonzero generator")
    n = F[0].ring.nvars
    y = as_coords(y if y is not None else [0] * n)
    check_on_variety(F, y, cfg.residual_tol)
    Fs = _translated(F, y)
    graded = GradedDual([f.homogenize() for f in Fs], cfg)
    local = LocalDual(Fs, [0] * n, cfg, check=False)

    top_gen = max(f.degree() for f in Fs)
    hcorners = []
    prev_in = set()
    quiet = 0
    M = MonomialIdeal([], n)
    for k in range(cfg.max_degree + 1):
        std = set(graded.standard_monomials(k))
        in_k = [m for m in monomials_of_degree(n + 1, k, True) if m not in std]
        new = []
        for m in in_k:
            below = [m[:j] + (m[j] - 1,) + m[j + 1:] for j in range(n + 1) if m[j]]
            if not any(b in prev_in for b in below):
                new.append(m)
        hcorners.extend(new)
        prev_in = set(in_k)
        M = MonomialIdeal([m[:-1] for m in hcorners], n)
        quiet = 0 if new else quiet + 1
        if k == 0 or new:
            continue
        if any(M.hilbert(j) != local.dim(j) - local.dim(j - 1) for j in range(k + 1)):
            continue
        if M.is_zero_dimensional():
            top = max(sum(s) for s in M.scorners()) if M.scorners() else 0
            if k > top:
                return Staircase(M.gens, n, k, True, hcorners)
        elif quiet >= 2 and k > top_gen:
            return Staircase(M.gens, n, k, False, hcorners)
    raise IncompleteStaircaseError(
        f"g-corner search reached max_degree={cfg.max_degree}",
        partial=Staircase(M.gens, n, cfg.max_degree, False, hcorners),
    )


def scorners(st, bound=None):
    if isinstance(st, Staircase):
        st = st.ideal
    elif not isinstance(st, MonomialIdeal):
        gens = list(st)
        st = MonomialIdeal(gens, len(gens[0]))
    return st.scorners(bound)


def _interpolate(points):
    """Coefficients (constant first) of the polynomial through ``(k, value)`` pairs."""
    m = len(points)
    coeffs = [Fraction(0)] * m
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t in range(m):
            coeffs[t] += yi * basis[t] / denom
    return coeffs


def _eval(coeffs, k):
    return sum(c * k ** t for t, c in enumerate(coeffs))


def monomial_stats(M):
    """Hilbert data of a monomial ideal (exact)."""
    if M.is_zero_dimensional():
        sc = M.scorners()
        rho = max(sum(s) for s in sc) + 1 if sc else 0
        values = [M.hilbert(k) for k in range(rho + 1)]
        return HilbertData(values, rho, sum(values), 0, [])
    d = M.dimension()
    top = sum(M.max_exponents()) + 2 * d + 2
    values = [M.hilbert(k) for k in range(top + 1)]
    fit = [(k, Fraction(values[k])) for k in range(top - 2 * d + 1, top + 1)]
    coeffs = _interpolate(fit[-d:])
    if any(_eval(coeffs, k) != v for k, v in fit):
        raise ArithmeticError("Hilbert polynomial fit is inconsistent")
    coeffs = coeffs + [Fraction(0)] * (d - len(coeffs))
    rho = 0
    for k in range(top, -1, -1):
        if _eval(coeffs, k) != values[k]:
            rho = k + 1
            break
    mu = coeffs[d - 1] * factorial(d - 1)
    return HilbertData(values[: max(rho, 1) + 1], rho, int(mu), d, [c for c in coeffs])


def staircase_stats(F, y=None, cfg=None):
    st = gcorners(F, y, cfg)
    stats = monomial_stats(st.ideal)
    # corners beyond the search degree could still appear
    stats.regularity_is_lower_bound = not st.certified
    return stats
