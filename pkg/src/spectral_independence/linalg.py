"""Dense symmetric eigensolvers and the group inverse.

Two self-contained kernels live here:

* :func:`sym_eigen` -- cyclic Jacobi with a round-robin (parallel) ordering,
  so each round applies ``n/2`` disjoint rotations as whole-array updates.
  Returns eigenvalues and orthonormal eigenvectors.
* :func:`sym_eigvals` -- Householder tridiagonalization followed by Sturm
  sequence bisection.  Values only; this is what the ratio bounds use, since
  they need nothing but extreme eigenvalues and it stays fast at n ~ 400.

numpy is used for array arithmetic only; no LAPACK routine is called.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InputError

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with column-aligned eigenvectors.

    ``vectors`` is ``None`` for closed-form spectra that carry values only.
    """

    values: np.ndarray
    vectors: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.values)

    @property
    def largest(self) -> float:
        return float(self.values[0])

    @property
    def smallest(self) -> float:
        return float(self.values[-1])


def _as_symmetric(a, *, rtol: float = 1e-12) -> np.ndarray:
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise InputError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InputError("matrix has non-finite entries")
    scale = max(1.0, inf_norm(a))
    if np.max(np.abs(a - a.T)) > rtol * scale:
        raise InputError("matrix is not symmetric")
    return a


def inf_norm(a: np.ndarray) -> float:
    """Maximum absolute row sum."""
    return float(np.max(np.sum(np.abs(a), axis=1))) if a.size else 0.0


@lru_cache(maxsize=64)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Pairings covering every (p, q), p < q, once per sweep in n-1 rounds."""
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for i in range(size // 2):
            p, q = players[i], players[size - 1 - i]
            if p < n and q < n:
                ps.append(min(p, q))
                qs.append(max(p, q))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _jacobi(a: np.ndarray, max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v
    rounds = _round_robin(n)
    total = np.sqrt(np.sum(a * a))
    if total == 0.0:
        return np.zeros(n), v
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(a.diagonal()))
        if off <= 4 * _EPS * total:
            break
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            app, aqq = a[p, p], a[q, q]
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                theta = np.where(active, (aqq - app) / (2.0 * np.where(active, apq, 1.0)), 0.0)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            # columns: A <- A P
            cp, cq = a[:, p], a[:, q]
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            # rows: A <- P^T A
            rp, rq = a[p, :], a[q, :]
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p], v[:, q]
            v[:, p] = vp * c - vq * s
            v[:, q] = vp * s + vq * c
        a = 0.5 * (a + a.T)
    return a.diagonal().copy(), v


def sym_eigen(a) -> Spectrum:
    """Full eigendecomposition of a real symmetric matrix.

    Values are sorted descending; ``vectors[:, i]`` pairs with ``values[i]``.
    Raises :class:`InputError` for non-finite or asymmetric input.
    """
    a = _as_symmetric(a)
    a = 0.5 * (a + a.T)
    values, vectors = _jacobi(a.copy())
    order = np.argsort(-values, kind="stable")
    return Spectrum(values[order], vectors[:, order])


def _tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = a.copy()
    n = a.shape[0]
    off = np.zeros(max(n - 1, 0))
    for k in range(n - 2):
        x = a[k + 1:, k]
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            off[k] = 0.0
            continue
        sign = 1.0 if x[0] >= 0 else -1.0
        u = x.copy()
        u[0] += sign * alpha
        u /= np.linalg.norm(u)
        sub = a[k + 1:, k + 1:]
        p = sub @ u
        w = p - (u @ p) * u
        sub -= 2.0 * (np.outer(u, w) + np.outer(w, u))
        off[k] = -sign * alpha
    if n >= 2:
        off[n - 2] = a[n - 1, n - 2]
    return a.diagonal().copy(), off


def _sturm_count(d: np.ndarray, e2: np.ndarray, shifts: np.ndarray, pivmin: float) -> np.ndarray:
    """Number of eigenvalues strictly below each shift."""
    q = d[0] - shifts
    q = np.where(np.abs(q) < pivmin, -pivmin, q)
    count = (q < 0).astype(np.int64)
    for i in range(1, len(d)):
        q = d[i] - shifts - e2[i - 1] / q
        q = np.where(np.abs(q) < pivmin, -pivmin, q)
        count += q < 0
    return count


def sym_eigvals(a) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, sorted descending."""
    a = _as_symmetric(a)
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    d, e = _tridiagonalize(a)
    e2 = e * e
    radius = np.abs(np.concatenate([e, [0.0]])) + np.abs(np.concatenate([[0.0], e]))
    lo_all = float(np.min(d - radius))
    hi_all = float(np.max(d + radius))
    span = max(hi_all - lo_all, abs(lo_all), abs(hi_all), 1.0)
    lo_all -= 4 * _EPS * span
    hi_all += 4 * _EPS * span
    pivmin = np.finfo(float).tiny * max(1.0, float(np.max(e2)) if e2.size else 1.0)
    index = np.arange(n)
    lo = np.full(n, lo_all)
    hi = np.full(n, hi_all)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        below = _sturm_count(d, e2, mid, pivmin)
        upper = below > index
        hi = np.where(upper, mid, hi)
        lo = np.where(upper, lo, mid)
        if np.all(hi - lo <= 2 * _EPS * np.maximum(np.abs(lo), np.abs(hi)) + pivmin):
            break
    values = 0.5 * (lo + hi)
    return values[::-1].copy()


def group_inverse(m, tol: float = 1e-9) -> np.ndarray:
    """Group inverse of a symmetric matrix.

    For symmetric ``m`` this coincides with the spectral pseudoinverse.
    Eigenvalues with ``|lambda| <= tol * max|lambda|`` are treated as zero.
    """
    m = _as_symmetric(m)
    spec = sym_eigen(m)
    vals, vecs = spec.values, spec.vectors
    top = float(np.max(np.abs(vals)))
    if top == 0.0:
        return np.zeros_like(m)
    keep = np.abs(vals) > tol * top
    inv = np.zeros_like(vals)
    inv[keep] = 1.0 / vals[keep]
    x = (vecs * inv) @ vecs.T
    return 0.5 * (x + x.T)
