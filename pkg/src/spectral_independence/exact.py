"""Exact ground truth at desk scale.

* maximum independent sets by branch and bound, bounding with a greedy
  cover of the candidate set by cliques of G (a greedy colouring of the
  complement), vertex sets held as Python int bitmasks;
* maximum t-independent sets of uniform hypergraphs by depth-first search
  with per-edge counters;
* the power graph G^k (coordinate-wise equal-or-adjacent) and the
  resulting lower bounds alpha(G^k)^(1/k) on the Shannon capacity.

Running out of budget is reported in the result, never raised.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import Refusal
from .graph import Graph
from .hypergraph import Hypergraph, check_t_set

DEFAULT_BUDGET = 10**8
DEFAULT_ALPHA_CAP = 64
DEFAULT_POWER_CAP = 4096


@dataclass(frozen=True)
class AlphaResult:
    value: int
    witness: tuple[int, ...]
    nodes_explored: int
    exact: bool = True

    @property
    def status(self) -> str:
        return "exact" if self.exact else "unknown, best found"


class _OutOfBudget(Exception):
    pass


def _greedy_independent(g: Graph) -> list[int]:
    nbrs = g.neighbors()
    alive = set(range(g.n))
    chosen = []
    while alive:
        v = min(alive, key=lambda u: (len(nbrs[u] & alive), u))
        chosen.append(v)
        alive -= nbrs[v] | {v}
    return sorted(chosen)


def exact_alpha(g: Graph, budget: int | None = None, cap: int = DEFAULT_ALPHA_CAP) -> AlphaResult:
    """Independence number with a maximum independent set as witness."""
    if budget is None:
        if g.n > cap:
            raise Refusal(f"exact search limited to n <= {cap} without an explicit budget (n={g.n})")
        budget = DEFAULT_BUDGET
    n = g.n
    if n == 0:
        return AlphaResult(0, (), 0)
    full = (1 << n) - 1
    nbr_mask = [0] * n
    for u, v in g.edges:
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u
    # non-neighbours: vertices that may join v in an independent set
    free = [full & ~nbr_mask[v] & ~(1 << v) for v in range(n)]

    seed = _greedy_independent(g)
    best = [len(seed), list(seed)]
    nodes = [0]

    def cover(cand: int) -> tuple[list[int], list[int]]:
        order, bounds = [], []
        uncovered = cand
        count = 0
        while uncovered:
            count += 1
            q = uncovered
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~low
                q &= nbr_mask[v]  # the class stays a clique of G
                uncovered &= ~low
                order.append(v)
                bounds.append(count)
        return order, bounds

    def expand(cand: int, chosen: list[int]) -> None:
        nodes[0] += 1
        if nodes[0] > budget:
            raise _OutOfBudget
        order, bounds = cover(cand)
        size = len(chosen)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best[0]:
                return
            v = order[i]
            chosen.append(v)
            nxt = cand & free[v]
            if nxt:
                expand(nxt, chosen)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, sorted(chosen)
            chosen.pop()
            cand &= ~(1 << v)

    exact = True
    try:
        expand(full, [])
    except _OutOfBudget:
        exact = False
    witness = tuple(best[1])
    if not g.is_independent(witness):
        raise AssertionError("internal error: witness is not independent")
    return AlphaResult(best[0], witness, nodes[0], exact)


def exact_alpha_t(h: Hypergraph, t: int, budget: int = DEFAULT_BUDGET) -> AlphaResult:
    """Largest S with |e ∩ S| in {0, t} for every edge."""
    if not 0 < t < h.k:
        raise Refusal(f"requires 0 < t < k (got t={t}, k={h.k})")
    n = h.n
    inc = h.incident_edges()
    order = sorted(range(n), key=lambda v: (-len(inc[v]), v))
    chosen_count = [0] * h.m
    undecided = [h.k] * h.m
    best = [0, []]
    nodes = [0]
    chosen: list[int] = []

    def search(i: int) -> None:
        nodes[0] += 1
        if nodes[0] > budget:
            raise _OutOfBudget
        if len(chosen) + (n - i) <= best[0]:
            return
        if i == n:
            best[0], best[1] = len(chosen), sorted(chosen)
            return
        v = order[i]
        es = inc[v]
        # take v: every incident edge must still be able to end at exactly t
        if all(chosen_count[e] < t and chosen_count[e] + undecided[e] >= t for e in es):
            for e in es:
                chosen_count[e] += 1
                undecided[e] -= 1
            chosen.append(v)
            search(i + 1)
            chosen.pop()
            for e in es:
                chosen_count[e] -= 1
                undecided[e] += 1
        # skip v: a touched edge must still be completable to t
        if all(chosen_count[e] == 0 or chosen_count[e] + undecided[e] - 1 >= t for e in es):
            for e in es:
                undecided[e] -= 1
            search(i + 1)
            for e in es:
                undecided[e] += 1

    exact = True
    try:
        search(0)
    except _OutOfBudget:
        exact = False
    witness = tuple(best[1])
    if not check_t_set(h, witness, t).valid:
        raise AssertionError("internal error: witness is not t-independent")
    return AlphaResult(best[0], witness, nodes[0], exact)


# -- power graphs ---------------------------------------------------------


def encode_tuple(coords: tuple[int, ...], n: int) -> int:
    """Mixed-radix index, coordinate 0 most significant."""
    index = 0
    for c in coords:
        index = index * n + c
    return index


def decode_tuple(index: int, n: int, k: int) -> tuple[int, ...]:
    coords = []
    for _ in range(k):
        index, c = divmod(index, n)
        coords.append(c)
    return tuple(reversed(coords))


def power_graph(g: Graph, k: int, cap: int = DEFAULT_POWER_CAP) -> Graph:
    """G^k on V(G)^k: distinct tuples adjacent when every coordinate pair is equal or adjacent."""
    if k < 1:
        raise Refusal(f"requires k >= 1 (got {k})")
    size = g.n ** k
    if size > cap:
        raise Refusal(f"power graph would have {size} vertices, above the cap of {cap}")
    nbrs = g.neighbors()
    closed = [sorted(nbrs[v] | {v}) for v in range(g.n)]
    edges = []
    for coords in itertools.product(range(g.n), repeat=k):
        u = encode_tuple(coords, g.n)
        for other in itertools.product(*(closed[c] for c in coords)):
            w = encode_tuple(other, g.n)
            if w > u:
                edges.append((u, w))
    return Graph.from_edges(size, edges)


@dataclass(frozen=True)
class ShannonLower:
    value: float
    alpha_by_power: dict[int, int]
    truncated: bool


def shannon_lower(g: Graph, kmax: int = 2, cap: int = DEFAULT_POWER_CAP,
                  budget: int = DEFAULT_BUDGET) -> ShannonLower:
    """max over k <= kmax of alpha(G^k)^(1/k), a lower bound on the Shannon capacity."""
    if kmax not in (1, 2):
        raise Refusal(f"only powers k <= 2 are supported (kmax={kmax})")
    alphas: dict[int, int] = {}
    truncated = False
    for k in range(1, kmax + 1):
        try:
            gk = power_graph(g, k, cap)
        except Refusal:
            truncated = True
            break
        res = exact_alpha(gk, budget=budget)
        if not res.exact:
            truncated = True
            break
        alphas[k] = res.value
    value = max((a ** (1.0 / k) for k, a in alphas.items()), default=0.0)
    return ShannonLower(value, alphas, truncated)
