"""SVD-thresholded kernels, spans and echelon pivots.

Every rank decision in the package goes through :func:`numerical_rank`, which
counts singular values above ``delta`` times the largest one (or times an
expected matrix scale, when the caller knows it).
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DependentBasisError


@dataclass
class RankInfo:
    rank: int
    singular_values: np.ndarray
    # singular values within a factor 10 of the threshold on either side
    ill_conditioned: bool = False
    gap: float = field(default=np.inf)


def numerical_rank(s, delta, scale=None):
    """Count singular values above ``delta * max(s[0], scale)``.

    ``scale`` is the expected size of the matrix; it keeps a matrix made only
    of roundoff from being read as having full rank.
    """
    s = np.asarray(s, dtype=float)
    top = max(s[0] if s.size else 0.0, scale or 0.0)
    if s.size == 0 or top == 0:
        return RankInfo(0, s)
    cut = delta * top
    r = int(np.sum(s > cut))
    near = np.any((s > cut / 10) & (s < cut * 10))
    gap = s[r - 1] / s[r] if 0 < r < s.size and s[r] > 0 else np.inf
    return RankInfo(r, s, bool(near), float(gap))


def _normalize_rows(a):
    norms = np.linalg.norm(a, axis=1)
    keep = norms > 0
    return a[keep] / norms[keep, None]


def kernel(a, delta, ncols=None, normalize=True, scale=None):
    """Orthonormal basis (as rows) of the numerical kernel of ``a``.

    With ``normalize`` the rows of ``a`` are scaled to unit length first, so
    ``delta`` is a relative threshold independent of how the constraints were
    written.  Callers whose rows are truncations of longer vectors scale them
    beforehand and pass ``normalize=False``: normalizing a truncated row would
    blow roundoff up to unit size; ``scale`` then gives the expected size.
    """
    a = np.asarray(a, dtype=complex)
    if ncols is None:
        ncols = a.shape[1]
    a = a.reshape(-1, ncols)
    a = _normalize_rows(a) if normalize else a[np.linalg.norm(a, axis=1) > 0]
    if a.shape[0] == 0:
        return np.eye(ncols, dtype=complex), RankInfo(0, np.zeros(0))
    _, s, vh = np.linalg.svd(a, full_matrices=True)
    info = numerical_rank(s, delta, scale)
    return vh[info.rank:].conj(), info


def span(rows, delta, scale=None):
    """Orthonormal basis (as rows) of the row space of ``rows``."""
    rows = np.asarray(rows, dtype=complex)
    if rows.size == 0:
        return rows.reshape(0, rows.shape[-1] if rows.ndim == 2 else 0), RankInfo(0, np.zeros(0))
    _, s, vh = np.linalg.svd(rows, full_matrices=False)
    info = numerical_rank(s, delta, scale)
    return vh[: info.rank], info


def complement(rows, ncols):
    """Annihilator rows ``w`` with ``w @ v == 0`` exactly for ``v`` in the span of ``rows``."""
    rows = np.asarray(rows, dtype=complex).reshape(-1, ncols)
    if rows.shape[0] == 0:
        return np.eye(ncols, dtype=complex)
    _, _, vh = np.linalg.svd(rows, full_matrices=True)
    return vh[rows.shape[0]:].conj()


def pivot_columns(rows, order, tol=1e-6):
    """Leading columns of the row space of ``rows`` scanned in ``order``.

    Column ``j`` is a pivot iff it is not (numerically) in the span of the
    columns scanned before it.  For an orthonormal ``rows`` this equals the set
    of leading entries of the reduced echelon form under that column order.
    """
    rows = np.asarray(rows, dtype=complex)
    r = rows.shape[0]
    if r == 0:
        return []
    q = np.zeros((r, 0), dtype=complex)
    pivots = []
    for j in order:
        v = rows[:, j].copy()
        for _ in range(2):
            v -= q @ (q.conj().T @ v)
        nv = np.linalg.norm(v)
        if nv > tol:
            q = np.hstack([q, (v / nv)[:, None]])
            pivots.append(j)
            if len(pivots) == r:
                break
    if len(pivots) < r:
        raise DependentBasisError(f"found {len(pivots)} pivots for {r} rows")
    return pivots


def reduce_rows(rows, order, tol=1e-6):
    """Reduced echelon form with unit leading coefficients.

    Returns ``(reduced, pivots)``; row ``k`` of ``reduced`` has its leading
    entry (first nonzero in ``order``) at column ``pivots[k]``.
    """
    rows = np.asarray(rows, dtype=complex)
    if rows.shape[0] == 0:
        return rows.copy(), []
    _, s, vh = np.linalg.svd(rows, full_matrices=False)
    if s[-1] <= tol * s[0]:
        raise DependentBasisError("input functionals are linearly dependent")
    ortho = vh
    pivots = pivot_columns(ortho, order, tol)
    red = np.linalg.solve(ortho[:, pivots], ortho)
    return red, pivots
