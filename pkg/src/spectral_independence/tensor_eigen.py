"""Minimum H-eigenvalue of even-order (signed) adjacency tensors.

For even k the minimum H-eigenvalue is the minimum of A x^k over the
k-norm sphere {sum x_i^k = 1}.  The solver minimizes the scale-free
quotient F(x) = A x^k / sum x_i^k from many starts:

* gradient phase: direction -(A x^{k-1} - F(x) x^[k-1]) (this is grad F / k
  on the sphere), Barzilai-Borwein trial step, Armijo backtracking,
  renormalization after every step;
* polish phase: Newton on the eigen-equation plus normalization, taken only
  while it does not raise F.

The problem is nonconvex, so the returned value is an upper bound on the true
minimum.  :func:`psd_probe` and :func:`oracle_min_h` are the checks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import Refusal
from .hypergraph import (
    AnyHypergraph,
    Hypergraph,
    SignedHypergraph,
    axk,
    axk1,
    axk2,
    eigen_residual,
    odd_bipartition,
    parity_solution,
    switching_set,
)
from .linalg import sym_eigvals

DEFAULT_SEED = 0x5EED


@dataclass(frozen=True)
class SolverConfig:
    starts: int = 64
    seed: int = DEFAULT_SEED
    max_iter: int = 10_000
    step_tol: float = 1e-12
    residual_tol: float = 1e-8
    newton_switch: float = 1e-4
    probe_trials: int = 256


@dataclass(frozen=True)
class HEigenPair:
    lam: float
    x: np.ndarray
    residual: float
    starts_used: int
    converged: bool


def _require_even(h: AnyHypergraph) -> None:
    if h.k % 2:
        raise Refusal(f"requires k even: the variational characterization of the minimum H-eigenvalue needs even order (k={h.k})")


def _normalize(x: np.ndarray, k: int) -> np.ndarray:
    return x / np.sum(x ** k) ** (1.0 / k)


def _newton(h: AnyHypergraph, x: np.ndarray, lam: float, tol: float, iters: int = 30):
    k, n = h.k, h.n
    res = eigen_residual(h, lam, x)
    for _ in range(iters):
        if res <= tol:
            break
        xk1 = x ** (k - 1)
        r = axk1(h, x) - lam * xk1
        jac = np.zeros((n + 1, n + 1))
        jac[:n, :n] = (k - 1) * (axk2(h, x) - lam * np.diag(x ** (k - 2)))
        jac[:n, n] = -xk1
        jac[n, :n] = k * xk1
        rhs = -np.concatenate([r, [np.sum(x ** k) - 1.0]])
        step = np.linalg.lstsq(jac, rhs, rcond=None)[0]
        improved = False
        t = 1.0
        for _ in range(8):
            xn = _normalize(x + t * step[:n], k)
            ln = axk(h, xn)
            rn = eigen_residual(h, ln, xn)
            if rn < res:
                x, lam, res, improved = xn, ln, rn, True
                break
            t *= 0.5
        if not improved:
            break
    return x, lam, res


def _descend(h: AnyHypergraph, x0: np.ndarray, cfg: SolverConfig):
    """One start: gradient phase then Newton polish.  Returns (lam, x, residual)."""
    k = h.k
    x = _normalize(x0, k)
    lam = axk(h, x)
    g = axk1(h, x) - lam * x ** (k - 1)
    eta = 1.0 / max(1.0, float(np.max(np.abs(g))))
    for _ in range(cfg.max_iter):
        res = float(np.max(np.abs(g)))
        if res <= cfg.residual_tol:
            break
        if res <= cfg.newton_switch:
            xn, ln, rn = _newton(h, x, lam, cfg.residual_tol)
            if ln <= lam + 1e-12 and rn <= cfg.residual_tol:
                return ln, xn, rn
        gg = float(g @ g)
        trial = eta
        while True:
            xn = _normalize(x - trial * g, k)
            ln = axk(h, xn)
            if ln <= lam - 1e-4 * trial * k * gg:
                break
            trial *= 0.5
            if trial * math.sqrt(gg) < cfg.step_tol:
                xn = None
                break
        if xn is None:
            break
        gn = axk1(h, xn) - ln * xn ** (k - 1)
        s, y = xn - x, gn - g
        sy = float(s @ y)
        eta = float(s @ s) / sy if sy > 0 else 2.0 * trial
        eta = min(max(eta, 1e-10), 1e6)
        x, lam, g = xn, ln, gn
    res = eigen_residual(h, lam, x)
    if res > cfg.residual_tol:
        xn, ln, rn = _newton(h, x, lam, cfg.residual_tol)
        if ln <= lam + 1e-12 and rn < res:
            x, lam, res = xn, ln, rn
    return lam, x, res


def _structured_starts(h: AnyHypergraph, limit: int) -> list[np.ndarray]:
    n = h.n
    starts = []
    base = h.base
    signed = isinstance(h, SignedHypergraph)
    flip = switching_set(h) if signed else ()
    if flip is not None:
        odd = odd_bipartition(base)
        if odd is not None:
            x = np.ones(n)
            x[list(odd)] = -1.0
            x[list(flip)] *= -1.0
            starts.append(x)
    # greedy sign descent on +-1 vectors
    x = np.ones(n)
    improved = True
    while improved:
        improved = False
        for v in range(n):
            y = x.copy()
            y[v] = -y[v]
            if axk(h, y) < axk(h, x) - 1e-12:
                x, improved = y, True
    starts.append(x)
    for v in range(n):
        y = np.ones(n)
        y[v] = -1.0
        starts.append(y)
    return starts[:limit]


def _tie_key(x: np.ndarray) -> tuple:
    return tuple(np.round(x, 8).tolist())


def min_h_eigenvalue(h: AnyHypergraph, config: SolverConfig | None = None) -> HEigenPair:
    """Smallest H-eigenvalue estimate from a seeded multi-start descent.

    Deterministic for a fixed seed.  The value is the best local minimum
    found, hence never below the true minimum.
    """
    cfg = config or SolverConfig()
    _require_even(h)
    if h.m == 0:
        raise Refusal("requires at least one edge (m >= 1)")
    rng = np.random.default_rng(cfg.seed)
    n = h.n
    starts = _structured_starts(h, max(1, cfg.starts // 2))
    starts = [s + 1e-3 * rng.standard_normal(n) for s in starts]
    while len(starts) < cfg.starts:
        starts.append(rng.standard_t(2.0, size=n))

    results = [_descend(h, s, cfg) for s in starts]
    used = len(starts)

    best = min(r[0] for r in results)
    probe_value, probe_x = psd_probe(h, best, cfg.probe_trials, cfg.seed + 1)
    if probe_value < -1e-8:
        results.append(_descend(h, probe_x, cfg))
        used += 1
        best = min(r[0] for r in results)

    ties = [r for r in results if r[0] <= best + 1e-10]
    lam, x, res = min(ties, key=lambda r: (_tie_key(r[1]), r[0]))
    return HEigenPair(float(lam), x, float(res), used, bool(res <= cfg.residual_tol))


def psd_probe(h: AnyHypergraph, lam: float, trials: int = 256, seed: int = DEFAULT_SEED):
    """Worst observed (A - lam I) x^k over random unit-k-norm vectors.

    Returns ``(value, x)``.  A value below -1e-8 shows ``lam`` exceeds the
    objective at ``x`` and hence is not the minimum H-eigenvalue.
    """
    _require_even(h)
    rng = np.random.default_rng(seed)
    k, n = h.k, h.n
    worst, worst_x = math.inf, None
    edges = h.edge_array
    for i in range(trials):
        if i % 2 == 0 or h.m == 0:
            x = rng.standard_normal(n)
        else:
            # concentrate on one edge, where single-edge minimizers live
            x = 0.05 * rng.standard_normal(n)
            e = edges[rng.integers(h.m)]
            x[e] += rng.choice([-1.0, 1.0], size=k)
        if not np.any(x):
            continue
        x = _normalize(x, k)
        value = axk(h, x) - lam
        if value < worst:
            worst, worst_x = value, x
    return float(worst), worst_x


def exact_min_h_eigenvalue(h: AnyHypergraph) -> float | None:
    """The minimum H-eigenvalue when it is known in closed form, else None.

    Known cases: k = 2 (matrix eigenvalue); d-regular hypergraphs with an
    odd bipartition, whose minimum is -d; signings switching equivalent to
    the all-positive one, which share its value; and signings of a d-regular
    hypergraph switching equivalent to the all-negative one, whose minimum
    is -(largest H-eigenvalue of A) = -d.
    """
    if h.m == 0 or h.k % 2:
        return None
    if h.k == 2:
        a = np.zeros((h.n, h.n))
        e = h.edge_array
        a[e[:, 0], e[:, 1]] = h.sign_array
        a[e[:, 1], e[:, 0]] = h.sign_array
        return float(sym_eigvals(a)[-1])
    base = h.base
    if isinstance(h, SignedHypergraph) and switching_set(h) is None:
        negative = parity_solution(base, [1 if s > 0 else 0 for s in h.signs]) is not None
        if negative and base.is_regular():
            return -float(base.degree[0])
        return None
    if base.is_regular() and odd_bipartition(base) is not None:
        return -float(base.degree[0])
    return None


# -- independent oracle ---------------------------------------------------


def dense_tensor(h: AnyHypergraph) -> np.ndarray:
    """Materialize the order-k tensor (small n only)."""
    k, n = h.k, h.n
    t = np.zeros((n,) * k)
    scale = 1.0 / math.factorial(k - 1)
    for e, s in zip(h.edges, h.sign_array):
        for perm in itertools.permutations(e):
            t[perm] = s * scale
    return t


def _dense_form(t: np.ndarray, xs: np.ndarray) -> np.ndarray:
    """T x^k for each row of xs."""
    n = t.shape[0]
    k = t.ndim
    y = xs @ t.reshape(n, -1)  # contract first index
    for _ in range(k - 1):
        y = y.reshape(len(xs), n, -1)
        y = np.einsum("bi,bij->bj", xs, y)
    return y.reshape(len(xs))


def oracle_min_h(h: AnyHypergraph, grid: int = 3, polish: int = 16) -> float:
    """Grid search over signs x magnitudes on the sphere, then BFGS polish.

    Uses the materialized tensor, not the edge-wise contraction.  Intended
    for tests on n <= 6.
    """
    from scipy.optimize import minimize

    _require_even(h)
    n, k = h.n, h.k
    if n > 6:
        raise Refusal(f"oracle limited to n <= 6 (got n={n})")
    if h.m == 0:
        return 0.0
    t = dense_tensor(h)
    levels = np.linspace(0.0, 1.0, grid + 1)
    mags = np.array(list(itertools.product(levels, repeat=n)))
    mags = mags[np.any(mags > 0, axis=1)]
    signs = np.array([(1.0,) + s for s in itertools.product((1.0, -1.0), repeat=n - 1)])

    best_per_pattern = []
    for sgn in signs:
        xs = mags * sgn
        vals = _dense_form(t, xs) / np.sum(xs ** k, axis=1)
        i = int(np.argmin(vals))
        best_per_pattern.append((float(vals[i]), xs[i]))
    best_per_pattern.sort(key=lambda p: p[0])

    def quotient(y):
        denom = np.sum(y ** k)
        if denom < 1e-300:
            return 0.0, np.zeros(n)
        # T x^{k-1} by contracting the trailing indices one at a time
        v = t
        for _ in range(k - 1):
            v = v @ y
        f = float(v @ y)
        grad = k * (v * denom - f * y ** (k - 1)) / denom ** 2
        return f / denom, grad

    best = best_per_pattern[0][0]
    for _, x0 in best_per_pattern[:polish]:
        out = minimize(quotient, x0, jac=True, method="BFGS", options={"gtol": 1e-10})
        best = min(best, float(out.fun))
    return best
