"""Sparse multivariate polynomials with complex coefficients.

Monomials are exponent tuples.  The only monomial order used anywhere in the
package is the graded local order: lower total degree is *larger*
(so ``1`` is the largest monomial) and ties within a degree are broken by
reverse lexicographic comparison on the declared variable order.

In a homogenized ring the extra variable ``h`` is always the last one and
monomials of equal degree are compared through their dehomogenized images.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import RingMismatchError


@dataclass(frozen=True)
class Ring:
    names: tuple
    homogenized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"variable names must be distinct: {self.names}")

    @property
    def nvars(self):
        return len(self.names)

    def homogenization(self):
        if self.homogenized:
            raise RingMismatchError("already homogenized")
        h = "h"
        while h in self.names:
            h += "_"
        return Ring(self.names + (h,), homogenized=True)

    def dehomogenization(self):
        if not self.homogenized:
            raise RingMismatchError("ring has no homogenizing variable")
        return Ring(self.names[:-1])

    def gens(self):
        return [Polynomial.variable(self, i) for i in range(self.nvars)]


def primal_key(alpha, homogenized=False):
    """Sort key realizing the primal order: smaller key means larger monomial."""
    if homogenized:
        x = alpha[:-1]
        return (sum(alpha), sum(x), tuple(reversed(x)))
    return (sum(alpha), tuple(reversed(alpha)))


def compare_primal(a, b, homogenized=False):
    """Return 1 if ``x^a > x^b`` in the primal order, -1 if smaller, 0 if equal."""
    if len(a) != len(b):
        raise ValueError(f"exponent length mismatch: {len(a)} vs {len(b)}")
    ka, kb = primal_key(tuple(a), homogenized), primal_key(tuple(b), homogenized)
    if ka == kb:
        return 0
    return 1 if ka < kb else -1


@lru_cache(maxsize=None)
def monomials_of_degree(n, d, homogenized=False):
    """All exponent tuples of length ``n`` and total degree ``d``, largest first."""
    if d < 0:
        return ()
    out = []
    for cut in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        alpha = []
        for c in cut:
            alpha.append(c - prev - 1)
            prev = c
        alpha.append(d + n - 1 - prev - 1)
        out.append(tuple(alpha))
    out.sort(key=lambda a: primal_key(a, homogenized))
    return tuple(out)


@lru_cache(maxsize=None)
def monomials_upto(n, d, homogenized=False):
    """All exponent tuples of length ``n`` with total degree at most ``d``, largest first."""
    out = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(n, k, homogenized))
    return tuple(out)


def multinomial_shift(gamma, alpha):
    """Coefficient of ``x^(gamma-alpha)`` in the normalized derivative of ``x^gamma``."""
    c = 1
    for g, a in zip(gamma, alpha):
        if a > g:
            return 0
        c *= comb(g, a)
    return c


def _fmt_complex(c, digits=6, unit="i"):
    re, im = float(np.real(c)), float(np.imag(c))
    fr = f"{re:.{digits}g}"
    fi = f"{abs(im):.{digits}g}"
    if im == 0:
        return fr
    if re == 0:
        return f"{'-' if im < 0 else ''}{fi}*{unit}"
    return f"({fr}{'-' if im < 0 else '+'}{fi}*{unit})"


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to complex numbers."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        clean = {}
        n = ring.nvars
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != n or min(alpha, default=0) < 0:
                raise ValueError(f"bad exponent {alpha} for ring with {n} variables")
            c = complex(c)
            if c != 0:
                clean[alpha] = clean.get(alpha, 0) + c
        self._terms = {a: c for a, c in clean.items() if c != 0}

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def variable(cls, ring, i):
        alpha = [0] * ring.nvars
        alpha[i] = 1
        return cls(ring, {tuple(alpha): 1})

    @classmethod
    def monomial(cls, ring, alpha, c=1):
        return cls(ring, {tuple(alpha): c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in primal order, largest monomial first."""
        h = self.ring.homogenized
        return sorted(self._terms.items(), key=lambda t: primal_key(t[0], h))

    def coefficient(self, alpha):
        return self._terms.get(tuple(alpha), 0j)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def degree(self):
        if not self._terms:
            return -1
        return max(sum(a) for a in self._terms)

    def order(self):
        """Lowest total degree among the terms."""
        if not self._terms:
            return -1
        return min(sum(a) for a in self._terms)

    def is_homogeneous(self):
        return len({sum(a) for a in self._terms}) <= 1

    def norm(self):
        return float(np.sqrt(sum(abs(c) ** 2 for c in self._terms.values())))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring.names} vs {other.ring.names}")
            return other
        if isinstance(other, (int, float, complex, np.number)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self._terms)
        for a, c in other._terms.items():
            t[a] = t.get(a, 0) + c
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                ab = tuple(x + y for x, y in zip(a, b))
                t[ab] = t.get(ab, 0) + c * d
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            if c.degree() != 0:
                raise ValueError("division only by nonzero constants")
            c = c.coefficient((0,) * self.ring.nvars)
        return Polynomial(self.ring, {a: v / c for a, v in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = self._coerce(other)
            if other is NotImplemented:
                return False
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def chop(self, tol=1e-10):
        """Drop coefficients below ``tol`` times the largest one."""
        if not self._terms:
            return self
        top = max(abs(c) for c in self._terms.values())
        out = {}
        for a, c in self._terms.items():
            re = c.real if abs(c.real) > tol * top else 0.0
            im = c.imag if abs(c.imag) > tol * top else 0.0
            if re or im:
                out[a] = complex(re, im)
        return Polynomial(self.ring, out)

    def allclose(self, other, tol=1e-12):
        """Coefficientwise comparison with a tolerance relative to the larger norm."""
        diff = (self - other).norm()
        return diff <= tol * max(1.0, self.norm(), other.norm())

    def __call__(self, point):
        return self.evaluate(point)

    def evaluate(self, point):
        point = np.asarray(point, dtype=complex)
        if point.shape != (self.ring.nvars,):
            raise ValueError(f"point has {point.size} coordinates, ring has {self.ring.nvars}")
        total = 0j
        for a, c in self._terms.items():
            total += c * np.prod(point ** np.array(a))
        return complex(total)

    def shift(self, y):
        """Return the polynomial ``x -> f(x + y)``."""
        y = np.asarray(y, dtype=complex)
        t = {}
        for a, c in self._terms.items():
            ranges = [range(ai + 1) for ai in a]
            for beta in itertools.product(*ranges):
                w = c * multinomial_shift(a, beta)
                for ai, bi, yi in zip(a, beta, y):
                    if ai > bi:
                        w *= yi ** (ai - bi)
                if w != 0:
                    t[beta] = t.get(beta, 0) + w
        return Polynomial(self.ring, t)

    def normalized_derivative(self, beta):
        """Apply ``(1/beta!) d^|beta| / dx^beta``."""
        t = {}
        for a, c in self._terms.items():
            m = multinomial_shift(a, beta)
            if m:
                ab = tuple(x - y for x, y in zip(a, beta))
                t[ab] = t.get(ab, 0) + c * m
        return Polynomial(self.ring, t)

    def extend(self, ring, positions=None):
        """Embed into a larger ring; variable ``i`` goes to ``positions[i]``."""
        if positions is None:
            positions = [ring.names.index(n) for n in self.ring.names]
        t = {}
        for a, c in self._terms.items():
            b = [0] * ring.nvars
            for i, p in enumerate(positions):
                b[p] = a[i]
            t[tuple(b)] = c
        return Polynomial(ring, t)

    def homogenize(self):
        ring = self.ring.homogenization()
        d = self.degree()
        t = {a + (d - sum(a),): c for a, c in self._terms.items()}
        return Polynomial(ring, t)

    def dehomogenize(self):
        ring = self.ring.dehomogenization()
        t = {}
        for a, c in self._terms.items():
            t[a[:-1]] = t.get(a[:-1], 0) + c
        return Polynomial(ring, t)

    def initial_term(self):
        """Largest monomial of the support in the primal order."""
        if not self._terms:
            raise ValueError("zero polynomial has no initial term")
        return self.items()[0][0]

    def to_json(self):
        return [[list(a), [float(np.real(c)), float(np.imag(c))]] for a, c in self.items()]

    def __str__(self):
        return self.to_string()

    def to_string(self, digits=6):
        """Human-readable form that :func:`embcomp.parse.parse_polynomial` reads back."""
        if not self._terms:
            return "0"
        # the parser reads "i" as a variable when one is declared
        unit = "ii" if "i" in self.ring.names else "i"
        parts = []
        for a, c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0]))):
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(self.ring.names, a) if e
            )
            fc = _fmt_complex(c, digits, unit)
            if not mono:
                parts.append(fc)
            elif fc in ("1", "-1"):
                parts.append(fc[:-1] + mono)
            else:
                parts.append(f"{fc}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self})"


def homogenize(f):
    return f.homogenize()


def dehomogenize(f):
    return f.dehomogenize()


def initial_term(f):
    return f.initial_term()
