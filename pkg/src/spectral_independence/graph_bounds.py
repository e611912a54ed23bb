"""Spectral upper bounds on the independence number of a graph.

Four ratio-type bounds:

    hoffman     -lam_n * n / (d - lam_n)                    d-regular, d > 0
    haemers     n * (-lam_1 lam_n) / (delta^2 - lam_1 lam_n) delta > 0
    laplacian   n * (mu - delta) / mu                       mu > 0
    ratio       -lam_n * n * (dbar - lam_n) / (delta - lam_n)^2   dbar > 0

The last one also bounds the Lovász number.  Besides the bounds this module
evaluates the group-inverse functional

    x^T M^# x * max_u M_uu / x_u^2

over admissible pairs (M, x), which upper-bounds the Lovász number, and uses
it to certify alpha = Theta = theta for independent sets that every outside
vertex sees at least -lam_n times.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import Refusal
from .graph import Graph, check_vertex_set, adjacency_matrix, laplacian_matrix
from .linalg import Spectrum, inf_norm, sym_eigen, sym_eigvals

EIG_TOL = 1e-9
COUNT_TOL = 1e-6


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: float
    parameters: dict[str, float]
    tight: object | None = None
    notes: tuple[str, ...] = ()
    tolerance: float = EIG_TOL


@dataclass(frozen=True)
class ThetaCertificate:
    set: tuple[int, ...]
    lambda_min: float
    slack: float
    certified: bool
    independent: bool
    functional: float | None = None
    tolerance: float = EIG_TOL


@dataclass(frozen=True)
class RatioEqualityWitness:
    set: tuple[int, ...]
    degree_ok: bool
    neighbor_counts: tuple[tuple[int, int, float], ...] = field(repr=False)
    all_match: bool
    tolerance: float = COUNT_TOL


class CertificateMismatch(RuntimeError):
    """The combinatorial certificate and its numeric witness disagree."""


@lru_cache(maxsize=256)
def adjacency_eigenvalues(g: Graph) -> np.ndarray:
    """Adjacency eigenvalues, descending (cached per graph)."""
    if g.n == 0:
        return np.zeros(0)
    vals = sym_eigvals(adjacency_matrix(g))
    vals.flags.writeable = False
    return vals


@lru_cache(maxsize=256)
def laplacian_eigenvalues(g: Graph) -> np.ndarray:
    if g.n == 0:
        return np.zeros(0)
    vals = sym_eigvals(laplacian_matrix(g))
    vals.flags.writeable = False
    return vals


def _scaled_tol(g: Graph) -> float:
    return EIG_TOL * max(1.0, float(max(g.degree, default=0)))


def _require_edges(g: Graph, what: str) -> None:
    if g.m == 0:
        raise Refusal(f"{what} requires at least one edge (average degree > 0)")


def hoffman_bound(g: Graph) -> BoundReport:
    if not g.is_regular() or g.degree[0] == 0:
        raise Refusal("Hoffman bound requires a d-regular graph with d > 0")
    d = g.degree[0]
    lam = float(adjacency_eigenvalues(g)[-1])
    value = -lam * g.n / (d - lam)
    return BoundReport("hoffman", value, {"n": g.n, "d": d, "lambda_n": lam})


def haemers_bound(g: Graph) -> BoundReport:
    delta = g.min_degree
    if g.n == 0 or delta <= 0:
        raise Refusal("requires minimum degree delta > 0")
    vals = adjacency_eigenvalues(g)
    lam1, lamn = float(vals[0]), float(vals[-1])
    value = g.n * (-lam1 * lamn) / (delta**2 - lam1 * lamn)
    return BoundReport("haemers", value, {"n": g.n, "delta": delta, "lambda_1": lam1, "lambda_n": lamn})


def laplacian_bound(g: Graph) -> BoundReport:
    _require_edges(g, "the Laplacian bound (largest Laplacian eigenvalue mu > 0)")
    mu = float(laplacian_eigenvalues(g)[0])
    delta = g.min_degree
    value = g.n * (mu - delta) / mu
    return BoundReport("laplacian", value, {"n": g.n, "delta": delta, "mu": mu})


def ratio_bound(g: Graph) -> BoundReport:
    """Minimum-degree / average-degree ratio bound; also an upper bound on theta(G)."""
    _require_edges(g, "the ratio bound")
    lam = float(adjacency_eigenvalues(g)[-1])
    delta, dbar = g.min_degree, g.average_degree
    value = -lam * g.n * (dbar - lam) / (delta - lam) ** 2
    return BoundReport(
        "beta1",
        value,
        {"n": g.n, "m": g.m, "delta": delta, "dbar": dbar, "lambda_n": lam},
        notes=("also an upper bound on the Lovasz number",),
    )


GRAPH_BOUNDS = (hoffman_bound, haemers_bound, laplacian_bound, ratio_bound)


def all_graph_bounds(g: Graph) -> tuple[list[BoundReport], dict[str, str]]:
    """Every applicable bound, plus the refusal message of each inapplicable one."""
    reports, refused = [], {}
    for fn in GRAPH_BOUNDS:
        try:
            reports.append(fn(g))
        except Refusal as exc:
            refused[fn.__name__.removesuffix("_bound")] = str(exc)
    return reports, refused


def check_ratio_equality(g: Graph, vertices: Iterable[int]) -> RatioEqualityWitness:
    """Test the equality characterization of the ratio bound for a given independent set.

    Equality needs every vertex of S to have minimum degree, and every
    outside vertex i to see exactly -lam (d_i - lam) / (delta - lam) vertices of S.
    """
    s = check_vertex_set(g, vertices)
    if not g.is_independent(s):
        raise Refusal("the set must be independent")
    _require_edges(g, "the equality test")
    lam = float(adjacency_eigenvalues(g)[-1])
    delta = g.min_degree
    members = set(s)
    nbrs = g.neighbors()
    rows = []
    match = True
    for i in range(g.n):
        if i in members:
            continue
        actual = len(nbrs[i] & members)
        required = -lam * (g.degree[i] - lam) / (delta - lam)
        rows.append((i, actual, required))
        match &= abs(actual - required) <= COUNT_TOL
    degree_ok = all(g.degree[v] == delta for v in s)
    return RatioEqualityWitness(tuple(s), degree_ok, tuple(rows), degree_ok and match)


def _group_inverse_from(spec: Spectrum, tol: float) -> np.ndarray:
    vals, vecs = spec.values, spec.vectors
    top = float(np.max(np.abs(vals)))
    inv = np.zeros_like(vals)
    if top > 0:
        keep = np.abs(vals) > tol * top
        inv[keep] = 1.0 / vals[keep]
    return (vecs * inv) @ vecs.T


def theta_upper_group_inverse(m, x: Sequence[float], g: Graph, tol: float = EIG_TOL) -> float:
    """Evaluate x^T M^# x * max_u M_uu / x_u^2 for an admissible pair (M, x).

    Admissible: M is PSD, vanishes on nonadjacent distinct pairs, and x lies
    in the range of M with no zero entry.  The value bounds alpha(G) and the
    Lovász number from above.
    """
    m = np.array(m, dtype=float)
    x = np.array(x, dtype=float)
    n = g.n
    if m.shape != (n, n) or x.shape != (n,):
        raise Refusal(f"M must be {n}x{n} and x must have length {n}")
    nonadjacent = ~(adjacency_matrix(g).astype(bool) | np.eye(n, dtype=bool))
    if np.any(m[nonadjacent] != 0.0):
        i, j = np.argwhere(nonadjacent & (m != 0.0))[0]
        raise Refusal(f"support condition failed: M[{i},{j}] != 0 for nonadjacent vertices {i}, {j}")
    spec = sym_eigen(m)
    scale = max(1.0, inf_norm(m))
    if spec.smallest < -tol * scale:
        raise Refusal(f"PSD condition failed: M has eigenvalue {spec.smallest:.3g} < 0")
    mg = _group_inverse_from(spec, tol)
    xscale = max(1.0, float(np.max(np.abs(x))))
    if np.max(np.abs(m @ (mg @ x) - x)) > 1e-8 * xscale:
        raise Refusal("range condition failed: x is not in the column space of M")
    if np.any(np.abs(x) <= 1e-12 * xscale):
        raise Refusal("nonzero condition failed: x has a zero entry")
    return float(x @ mg @ x) * float(np.max(np.diag(m) / x**2))


def certify_theta(g: Graph, vertices: Iterable[int]) -> ThetaCertificate:
    """Certify alpha = Theta = theta = |S| when S is independent and every
    vertex outside S has at least -lam_n neighbours in S.

    A certified result also carries the group-inverse functional evaluated at
    M = A - lam_n I, x = M 1_S; it must reproduce |S| to 1e-6.
    """
    s = check_vertex_set(g, vertices)
    vals = adjacency_eigenvalues(g)
    lam = float(vals[-1]) if g.n else 0.0
    if lam >= 0:
        raise Refusal("requires minimum eigenvalue lambda < 0 (the graph needs an edge)")
    independent = g.is_independent(s)
    members = set(s)
    nbrs = g.neighbors()
    outside = [len(nbrs[i] & members) for i in range(g.n) if i not in members]
    slack = min(outside) - (-lam) if outside else float("inf")
    certified = independent and slack >= -_scaled_tol(g)
    functional = None
    if certified:
        a = adjacency_matrix(g)
        mat = a - lam * np.eye(g.n)
        y = np.zeros(g.n)
        y[s] = 1.0
        functional = theta_upper_group_inverse(mat, mat @ y, g)
        if abs(functional - len(s)) > COUNT_TOL:
            raise CertificateMismatch(
                f"group-inverse functional {functional!r} disagrees with |S| = {len(s)}"
            )
    return ThetaCertificate(tuple(s), lam, float(slack), certified, independent, functional)


def pendant_feasible(g: Graph, p: Sequence[int]) -> bool:
    """Whether lam_min(G) + min p - max p / min p >= 0, the condition under which
    attaching p_i pendant vertices at each vertex i yields a certifiable graph."""
    if len(p) != g.n:
        raise Refusal(f"need one pendant count per vertex ({g.n}), got {len(p)}")
    if any(pi < 1 for pi in p):
        raise Refusal("requires p_i >= 1 for every vertex")
    lam0 = float(adjacency_eigenvalues(g)[-1])
    lo, hi = min(p), max(p)
    return lam0 + lo - hi / lo >= -EIG_TOL
