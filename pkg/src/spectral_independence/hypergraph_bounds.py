"""Hoffman-type bounds on the t-independence number of even uniform hypergraphs.

For a k-uniform hypergraph (k even) with n vertices, m >= 1 edges, minimum
degree delta > 0 and minimum H-eigenvalue lam < 0,

    alpha_t <= t (k m - n lam) (-lam)^(t/(k-t))
               / [ (k-t) delta^(k/(k-t)) + (k delta - t lam) (-lam)^(t/(k-t)) ]

holds for odd t with lam taken from the adjacency tensor, and for even t
with lam taken from a suitable signed adjacency tensor.  The signing used
here puts -1 on the edges that meet a maximum t-independent set S and +1 on
the rest.  With k = 2, t = 1 the formula is the graph ratio bound.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable

from .errors import Refusal
from .exact import DEFAULT_BUDGET, exact_alpha_t
from .hypergraph import (
    AnyHypergraph,
    Hypergraph,
    SignedHypergraph,
    check_t_set,
    parity_solution,
    sign_from_set,
)
from .tensor_eigen import HEigenPair, SolverConfig, exact_min_h_eigenvalue, min_h_eigenvalue

EXACT = "exact-known"
HEURISTIC = "solver-heuristic"
COUNT_TOL = 1e-6
HEURISTIC_CAVEAT = (
    "lambda is the best local minimum found by the solver, an upper bound on the true "
    "minimum H-eigenvalue; the bound may be too small"
)


@dataclass(frozen=True)
class OddTEqualityWitness:
    set: tuple[int, ...]
    degree_ok: bool
    dprime: tuple[tuple[int, int, float], ...] = field(repr=False)
    all_match: bool
    tolerance: float = COUNT_TOL


@dataclass(frozen=True)
class HypBoundReport:
    name: str
    value: float
    t: int
    k: int
    n: int
    m: int
    delta: int
    lam: float
    lambda_source: str
    scaling: float
    equality: OddTEqualityWitness | None = None
    signing: tuple[int, ...] | None = None
    caveat: str | None = None
    tolerance: float = 1e-9


def _powers(delta: float, lam: float, k: int, t: int) -> tuple[float, float, float]:
    """(-lam)^(t/(k-t)), delta^(k/(k-t)) and delta^(t/(k-t)) via exp/log."""
    log_neg = math.log(-lam)
    log_delta = math.log(delta)
    r = k - t
    return math.exp(t / r * log_neg), math.exp(k / r * log_delta), math.exp(t / r * log_delta)


def ratio_formula(n: int, m: int, k: int, t: int, delta: float, lam: float) -> float:
    """Evaluate the bound for given parameters (refusing lam >= 0 or delta <= 0)."""
    if lam >= 0:
        raise Refusal(f"requires minimum H-eigenvalue lambda < 0 (got {lam})")
    if delta <= 0:
        raise Refusal("requires minimum degree delta > 0")
    neg_t, delta_k, _ = _powers(delta, lam, k, t)
    denom = (k - t) * delta_k + (k * delta - t * lam) * neg_t
    if not denom > 0:
        raise AssertionError(f"denominator {denom} should be positive")
    return t * (k * m - n * lam) * neg_t / denom


def _check_common(h: Hypergraph, t: int, parity: str) -> None:
    if h.k % 2:
        raise Refusal(f"requires k even (got k={h.k})")
    if not 0 < t < h.k:
        raise Refusal(f"requires 0 < t < k (got t={t}, k={h.k})")
    want_odd = parity == "odd"
    if (t % 2 == 1) != want_odd:
        raise Refusal(f"requires t {parity} and k even (got t={t}, k={h.k})")
    if h.m < 1:
        raise Refusal("requires at least one edge (m >= 1)")
    if h.min_degree <= 0:
        raise Refusal("requires minimum degree delta > 0 (no isolated vertices)")


def _resolve_lambda(h: AnyHypergraph, lam, source: str | None, config: SolverConfig | None):
    """Return (value, source, pair-or-None)."""
    if lam is None:
        exact = exact_min_h_eigenvalue(h)
        if exact is not None:
            return exact, EXACT, None
        pair = min_h_eigenvalue(h, config)
        return pair.lam, HEURISTIC, pair
    if isinstance(lam, HEigenPair):
        exact = exact_min_h_eigenvalue(h)
        if exact is not None and abs(exact - lam.lam) <= 1e-6 * max(1.0, abs(exact)):
            return lam.lam, EXACT, lam
        return lam.lam, HEURISTIC, lam
    return float(lam), source or EXACT, None


def odd_t_bound(h: Hypergraph, t: int, lam: float | HEigenPair | None = None, *,
                source: str | None = None, config: SolverConfig | None = None) -> HypBoundReport:
    """Upper bound on alpha_t for odd t, from the minimum H-eigenvalue of the adjacency tensor.

    ``lam`` may be a number (treated as exact unless ``source`` says otherwise),
    a solver result, or None to use a closed form when one is known and the
    solver otherwise.
    """
    _check_common(h, t, "odd")
    value_lam, src, _ = _resolve_lambda(h, lam, source, config)
    value = ratio_formula(h.n, h.m, h.k, t, h.min_degree, value_lam)
    scaling = (h.min_degree / -value_lam) ** (1.0 / (h.k - t))
    return HypBoundReport(
        f"alpha_{t}",
        value, t, h.k, h.n, h.m, h.min_degree, value_lam, src, scaling,
        caveat=HEURISTIC_CAVEAT if src == HEURISTIC else None,
    )


def strong_independence_bound(h: Hypergraph, lam: float | HEigenPair | None = None, *,
                              source: str | None = None,
                              config: SolverConfig | None = None) -> HypBoundReport:
    """The t = 1 case: a bound on the strong independence number alpha_1."""
    report = odd_t_bound(h, 1, lam, source=source, config=config)
    return HypBoundReport(**{**report.__dict__, "name": "alpha_1 (strong independence number)"})


def check_odd_t_equality(h: Hypergraph, t: int, lam: float | HEigenPair,
                         vertices: Iterable[int]) -> OddTEqualityWitness:
    """Test the equality characterization for a t-independent set S (t odd).

    Equality needs every vertex of S at minimum degree and every outside vertex i
    to lie in exactly ((-lam)^(k/(k-t)) + d_i (-lam)^(t/(k-t))) / (delta^(t/(k-t)) + (-lam)^(t/(k-t)))
    edges that meet S.
    """
    _check_common(h, t, "odd")
    lam = lam.lam if isinstance(lam, HEigenPair) else float(lam)
    check = check_t_set(h, vertices, t)
    if not check.valid:
        raise Refusal(f"the set is not t-independent (|e ∩ S| values {sorted(check.histogram)})")
    delta, k = h.min_degree, h.k
    neg_t, _, delta_t = _powers(delta, lam, k, t)
    neg_k = math.exp(k / (k - t) * math.log(-lam))
    members = set(check.set)
    inc = h.incident_edges()
    rows, match = [], True
    for i in range(h.n):
        if i in members:
            continue
        actual = sum(1 for j in inc[i] if any(v in members for v in h.edges[j]))
        required = (neg_k + h.degree[i] * neg_t) / (delta_t + neg_t)
        rows.append((i, actual, required))
        match &= abs(actual - required) <= COUNT_TOL
    degree_ok = all(h.degree[v] == delta for v in check.set)
    return OddTEqualityWitness(check.set, degree_ok, tuple(rows), degree_ok and match)


def _signed_lambda(sh: SignedHypergraph, config: SolverConfig | None) -> tuple[float, str]:
    exact = exact_min_h_eigenvalue(sh)
    if exact is not None:
        return exact, EXACT
    return min_h_eigenvalue(sh, config).lam, HEURISTIC


def signed_even_t_bound(h: Hypergraph, t: int, vertices: Iterable[int] | None = None, *,
                        lam: float | None = None, source: str | None = None,
                        config: SolverConfig | None = None,
                        budget: int = DEFAULT_BUDGET) -> HypBoundReport:
    """Upper bound on alpha_t for even t via the signed tensor induced by S.

    Without ``vertices`` a maximum t-independent set is found by exact search;
    if that exceeds ``budget`` the call is refused.  ``lam`` overrides the
    minimum H-eigenvalue of the signed tensor.
    """
    _check_common(h, t, "even")
    if vertices is None:
        res = exact_alpha_t(h, t, budget)
        if not res.exact:
            raise Refusal("no t-independent set supplied and exact search exceeded its budget")
        vertices = res.witness
    signed = sign_from_set(h, vertices, t)
    if lam is None:
        lam, src = _signed_lambda(signed, config)
    else:
        lam, src = float(lam), source or EXACT
    value = ratio_formula(h.n, h.m, h.k, t, h.min_degree, lam)
    scaling = (h.min_degree / -lam) ** (1.0 / (h.k - t))
    return HypBoundReport(
        f"alpha_{t} (signed)",
        value, t, h.k, h.n, h.m, h.min_degree, lam, src, scaling,
        signing=signed.signs,
        caveat=HEURISTIC_CAVEAT if src == HEURISTIC else None,
    )


@dataclass(frozen=True)
class SigningOutcome:
    signs: tuple[int, ...]
    lam: float
    lambda_source: str
    value: float


def signing_search(h: Hypergraph, t: int, *, config: SolverConfig | None = None,
                   max_edges: int = 12) -> list[SigningOutcome]:
    """Evaluate the even-t bound for every signing of the edges (m <= max_edges).

    Signings that differ by negating a vertex set share their spectrum, so
    the eigenvalue is computed once per switching class.
    """
    _check_common(h, t, "even")
    if h.m > max_edges:
        raise Refusal(f"exhaustive signing search limited to m <= {max_edges} (m={h.m})")
    classes: list[tuple[tuple[int, ...], float, str]] = []
    out = []
    for signs in itertools.product((1, -1), repeat=h.m):
        for rep, lam, src in classes:
            diff = [int(a != b) for a, b in zip(signs, rep)]
            if parity_solution(h, diff) is not None:
                break
        else:
            lam, src = _signed_lambda(SignedHypergraph(h, signs), config)
            classes.append((signs, lam, src))
        out.append(SigningOutcome(signs, lam, src, ratio_formula(h.n, h.m, h.k, t, h.min_degree, lam)))
    return out
