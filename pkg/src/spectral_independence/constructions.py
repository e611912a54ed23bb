"""Instance generators: odd-bipartite hypergraphs, pendant graphs and joins."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import Refusal
from .graph import Graph, circulant_graph, complete_graph, cycle_graph, empty_graph
from .graph_bounds import (
    ThetaCertificate,
    certify_theta,
    haemers_bound,
    laplacian_bound,
    pendant_feasible,
    ratio_bound,
)
from .hypergraph import Hypergraph
from .linalg import Spectrum


@dataclass(frozen=True)
class OddBipartiteInstance:
    hypergraph: Hypergraph
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    regular: bool
    degree: int | None
    lambda_min: float | None


def odd_bipartite_complete(k: int, t: int, a: int, b: int) -> OddBipartiteInstance:
    """All edges made of t vertices from V1 = {0..a-1} and k-t from V2 = {a..a+b-1}.

    Each edge meets V1 in t and V2 in k-t vertices, both odd.  When the
    result is d-regular its minimum H-eigenvalue is -d.
    """
    if k % 2 or t % 2 == 0 or not 0 < t < k:
        raise Refusal(f"requires k even and t, k-t odd (got k={k}, t={t})")
    if a < t or b < k - t:
        raise Refusal(f"requires a >= t and b >= k-t (got a={a}, b={b})")
    v1 = tuple(range(a))
    v2 = tuple(range(a, a + b))
    edges = [s + r for s in itertools.combinations(v1, t) for r in itertools.combinations(v2, k - t)]
    h = Hypergraph.from_edges(a + b, k, edges)
    d1 = math.comb(a - 1, t - 1) * math.comb(b, k - t)
    d2 = math.comb(a, t) * math.comb(b - 1, k - t - 1)
    regular = d1 == d2
    return OddBipartiteInstance(h, v1, v2, regular, d1 if regular else None,
                                -float(d1) if regular else None)


@dataclass(frozen=True)
class PendantInstance:
    graph: Graph
    pendants: tuple[int, ...]
    feasible: bool
    certificate: ThetaCertificate | None


def pendant_graph(g: Graph, p: Sequence[int]) -> PendantInstance:
    """Attach p[i] pendant vertices to vertex i.

    Pendants get ids n, n+1, ... in blocks ordered by attachment vertex.  When
    the feasibility condition holds the pendant set is certified as a maximum
    independent set with alpha = Theta = theta = sum(p).
    """
    if len(p) != g.n:
        raise Refusal(f"need one pendant count per vertex ({g.n}), got {len(p)}")
    if any(pi < 1 for pi in p):
        raise Refusal("requires p_i >= 1 for every vertex")
    edges = list(g.edges)
    nxt = g.n
    for v, count in enumerate(p):
        for _ in range(count):
            edges.append((v, nxt))
            nxt += 1
    h = Graph.from_edges(nxt, edges)
    pendants = tuple(range(g.n, nxt))
    # a single vertex has no adjacency spectrum to test; the star is always fine
    feasible = True if g.m == 0 and g.n == 1 else (g.m > 0 and pendant_feasible(g, p))
    cert = None
    if feasible:
        cert = certify_theta(h, pendants)
        if not cert.certified:
            raise AssertionError("feasible pendant graph failed to certify")
    return PendantInstance(h, pendants, feasible, cert)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the parts; G1 keeps ids 0..n1-1."""
    off = g1.n
    edges = list(g1.edges) + [(u + off, v + off) for u, v in g2.edges]
    edges += [(u, off + v) for u in range(g1.n) for v in range(g2.n)]
    return Graph.from_edges(g1.n + g2.n, edges)


def join_spectrum_regular(n1: int, r1: float, spec1: Spectrum,
                          n2: int, r2: float, spec2: Spectrum) -> Spectrum:
    """Adjacency spectrum of the join of an r1-regular and an r2-regular graph.

    The two principal eigenvalues are replaced by the roots of
    x^2 - (r1+r2) x + r1 r2 - n1 n2; everything else carries over.
    """
    for n, r, spec in ((n1, r1, spec1), (n2, r2, spec2)):
        if len(spec.values) != n:
            raise Refusal(f"spectrum has {len(spec.values)} values, expected {n}")
        if n and abs(spec.largest - r) > 1e-8 * max(1.0, abs(r)):
            raise Refusal(f"requires regular inputs: largest eigenvalue {spec.largest} != degree {r}")
    disc = math.sqrt((r1 - r2) ** 2 + 4.0 * n1 * n2)
    roots = [(r1 + r2 + disc) / 2.0, (r1 + r2 - disc) / 2.0]
    rest = list(spec1.values[1:]) + list(spec2.values[1:])
    return Spectrum(np.sort(np.array(roots + rest))[::-1].copy())


def regular_graph(n: int, r: int) -> Graph:
    """Some r-regular graph on n vertices (cycle, complete, empty or circulant)."""
    if n < 1 or not 0 <= r < n or (n * r) % 2:
        raise Refusal(f"no {r}-regular graph on {n} vertices")
    if r == 0:
        return empty_graph(n)
    if r == n - 1:
        return complete_graph(n)
    if r == 2:
        return cycle_graph(n)
    offsets = list(range(1, r // 2 + 1))
    if r % 2:
        offsets.append(n // 2)
    return circulant_graph(n, offsets)


@dataclass(frozen=True)
class JoinComparison:
    beta1: float
    beta2: float
    beta3: float
    beta2_closed: float
    beta3_closed: float
    mu_closed: float
    ordered: bool
    n: int


def join_bound_comparison(n1: int, r1: int, n2: int, r2: int) -> JoinComparison:
    """Ratio, Haemers and Laplacian bounds on the join of two regular graphs.

    Closed forms for the join: mu = n1 + n2, the Haemers bound equals
    (n1+n2)(n1 n2 - r1 r2) / (delta^2 + n1 n2 - r1 r2) and the Laplacian
    bound equals n1 + n2 - delta, where delta = min(r1 + n2, r2 + n1).
    """
    if n1 < 1 or n2 < 1:
        raise Refusal(f"requires both graphs non-empty (got n1={n1}, n2={n2})")
    g = join(regular_graph(n1, r1), regular_graph(n2, r2))
    b1 = ratio_bound(g).value
    b2 = haemers_bound(g).value
    b3 = laplacian_bound(g).value
    delta = min(r1 + n2, r2 + n1)
    q = n1 * n2 - r1 * r2
    b2c = (n1 + n2) * q / (delta**2 + q)
    b3c = float(n1 + n2 - delta)
    return JoinComparison(b1, b2, b3, b2c, b3c, float(n1 + n2), b1 < b2 < b3, g.n)
