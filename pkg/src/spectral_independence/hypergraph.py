"""k-uniform hypergraphs, signed variants, and adjacency-tensor contractions.

The adjacency tensor has entry 1/(k-1)! on every index tuple that is a
permutation of an edge.  Each edge therefore owns k! entries, and the
factorial cancels:

    A x^k            = k * sum_e sign(e) * prod_{v in e} x_v
    (A x^{k-1})_i    = sum_{e ∋ i} sign(e) * prod_{v in e, v != i} x_v

so nothing here materializes the n^k array.

Hyperedge-list format::

    k 4           optional; otherwise k is the size of the first edge
    n 8           optional; raises the vertex count
    0 1 2 3
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Union

import numpy as np

from .errors import ParseError, Refusal
from .graph import Graph


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    edges: tuple[tuple[int, ...], ...]
    degree: tuple[int, ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        if k < 1:
            raise ValueError("uniformity k must be positive")
        canon = []
        seen = set()
        deg = [0] * n
        for e in edges:
            e = tuple(sorted(int(v) for v in e))
            if len(e) != k:
                raise ValueError(f"edge {e} has {len(e)} vertices, expected {k}")
            if len(set(e)) != k:
                raise ValueError(f"edge {e} repeats a vertex")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e} out of range for n={n}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
            for v in e:
                deg[v] += 1
        canon.sort()
        return cls(n, k, tuple(canon), tuple(deg))

    @classmethod
    def from_graph(cls, g: Graph) -> "Hypergraph":
        return cls.from_edges(g.n, 2, g.sorted_edges())

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def min_degree(self) -> int:
        return min(self.degree) if self.n else 0

    @property
    def base(self) -> "Hypergraph":
        return self

    def is_regular(self) -> bool:
        return self.n > 0 and len(set(self.degree)) == 1

    @cached_property
    def edge_array(self) -> np.ndarray:
        return np.array(self.edges, dtype=np.intp).reshape(len(self.edges), self.k)

    @cached_property
    def sign_array(self) -> np.ndarray:
        return np.ones(len(self.edges))

    def incident_edges(self) -> list[list[int]]:
        """Edge indices containing each vertex (the sets E(i))."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return inc


@dataclass(frozen=True)
class SignedHypergraph:
    """A hypergraph whose adjacency-tensor entries carry a per-edge sign."""

    base: Hypergraph
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.base.m:
            raise ValueError("need one sign per edge")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    n = property(lambda self: self.base.n)
    k = property(lambda self: self.base.k)
    m = property(lambda self: self.base.m)
    edges = property(lambda self: self.base.edges)
    degree = property(lambda self: self.base.degree)
    min_degree = property(lambda self: self.base.min_degree)
    edge_array = property(lambda self: self.base.edge_array)

    @cached_property
    def sign_array(self) -> np.ndarray:
        return np.array(self.signs, dtype=float)

    def is_regular(self) -> bool:
        return self.base.is_regular()


AnyHypergraph = Union[Hypergraph, SignedHypergraph]


# -- text format ----------------------------------------------------------


def parse_hypergraph(text: str) -> Hypergraph:
    k: int | None = None
    header_n: int | None = None
    rows: list[tuple[tuple[int, ...], int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] in ("k", "n"):
            if len(tokens) != 2 or rows:
                raise ParseError(f"'{tokens[0]}' header must be '{tokens[0]} <int>' before edges", lineno)
            value = _int(tokens[1], lineno)
            if tokens[0] == "k":
                if value < 1:
                    raise ParseError("k must be positive", lineno)
                k = value
            else:
                header_n = value
            continue
        edge = tuple(_int(t, lineno) for t in tokens)
        if k is None:
            k = len(edge)
        if len(edge) != k:
            raise ParseError(f"ragged edge: {len(edge)} vertices, expected {k}", lineno)
        if len(set(edge)) != len(edge):
            raise ParseError(f"repeated vertex in edge {edge}", lineno)
        rows.append((tuple(sorted(edge)), lineno))

    seen = set()
    for e, lineno in rows:
        if e in seen:
            raise ParseError(f"duplicate edge {e}", lineno)
        seen.add(e)
    n = max((e[-1] for e, _ in rows), default=-1) + 1
    if header_n is not None:
        n = max(n, header_n)
    if k is None:
        raise ParseError("no edges and no 'k' header; uniformity unknown")
    return Hypergraph.from_edges(n, k, [e for e, _ in rows])


def _int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"non-integer token {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative value {value}", lineno)
    return value


def serialize_hypergraph(h: Hypergraph) -> str:
    lines = [f"k {h.k}", f"n {h.n}"] + [" ".join(map(str, e)) for e in h.edges]
    return "\n".join(lines) + "\n"


# -- contractions ---------------------------------------------------------


def _check_dim(h: AnyHypergraph, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (h.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({h.n},)")
    return x


def axk(h: AnyHypergraph, x) -> float:
    """The form A x^k, evaluated edge-wise."""
    x = _check_dim(h, x)
    if h.m == 0:
        return 0.0
    return float(h.k * np.dot(h.sign_array, np.prod(x[h.edge_array], axis=1)))


def _exclusive_products(p: np.ndarray) -> np.ndarray:
    """For each row, the product of all entries except the one at each column."""
    if p.shape[1] == 2:
        return p[:, ::-1].copy()
    out = np.ones_like(p)
    np.cumprod(p[:, :-1], axis=1, out=out[:, 1:])
    right = np.cumprod(p[:, :0:-1], axis=1)
    out[:, :-1] *= right[:, ::-1]
    return out


def axk1(h: AnyHypergraph, x) -> np.ndarray:
    """The vector A x^{k-1}; component i sums over edges containing i."""
    x = _check_dim(h, x)
    if h.m == 0:
        return np.zeros(h.n)
    e = h.edge_array
    contrib = _exclusive_products(x[e]) * h.sign_array[:, None]
    return np.bincount(e.ravel(), weights=contrib.ravel(), minlength=h.n)


def axk2(h: AnyHypergraph, x) -> np.ndarray:
    """The matrix A x^{k-2}; (k-1) times it is the Jacobian of A x^{k-1}."""
    x = _check_dim(h, x)
    out = np.zeros((h.n, h.n))
    if h.m == 0:
        return out
    e = h.edge_array
    vals = x[e]
    k = h.k
    for a in range(k):
        for b in range(a + 1, k):
            rest = [c for c in range(k) if c not in (a, b)]
            prod = np.prod(vals[:, rest], axis=1) * h.sign_array
            np.add.at(out, (e[:, a], e[:, b]), prod)
            np.add.at(out, (e[:, b], e[:, a]), prod)
    return out / (k - 1)


def eigen_residual(h: AnyHypergraph, lam: float, x) -> float:
    """Infinity norm of A x^{k-1} - lam * x^[k-1]."""
    x = _check_dim(h, x)
    return float(np.max(np.abs(axk1(h, x) - lam * x ** (h.k - 1)), initial=0.0))


# -- t-independent sets ---------------------------------------------------


@dataclass(frozen=True)
class TSetCheck:
    set: tuple[int, ...]
    t: int
    valid: bool
    histogram: dict[int, int]


def check_t_set(h: Hypergraph, vertices: Iterable[int], t: int) -> TSetCheck:
    """Whether every edge meets the set in 0 or t vertices."""
    if not 0 < t < h.k:
        raise Refusal(f"requires 0 < t < k (got t={t}, k={h.k})")
    s = sorted(set(int(v) for v in vertices))
    if any(not 0 <= v < h.n for v in s):
        raise ValueError(f"vertex set {s} out of range for n={h.n}")
    members = set(s)
    hist = Counter(sum(v in members for v in e) for e in h.edges)
    valid = set(hist) <= {0, t}
    return TSetCheck(tuple(s), t, valid, dict(sorted(hist.items())))


def sign_from_set(h: Hypergraph, vertices: Iterable[int], t: int) -> SignedHypergraph:
    """Sign -1 on edges meeting the set in t vertices, +1 on edges missing it."""
    check = check_t_set(h, vertices, t)
    if not check.valid:
        raise Refusal(f"the set is not t-independent: |e ∩ S| must lie in {{0, {t}}}, saw {sorted(check.histogram)}")
    members = set(check.set)
    signs = tuple(-1 if any(v in members for v in e) else 1 for e in h.edges)
    return SignedHypergraph(h, signs)


def parity_solution(h: Hypergraph, rhs: Iterable[int]) -> tuple[int, ...] | None:
    """A vertex set Y with |e ∩ Y| = rhs[e] (mod 2) for every edge, or None.

    Gaussian elimination over GF(2), rows packed into Python ints.
    """
    n = h.n
    pivots: list[tuple[int, int]] = []
    for e, b in zip(h.edges, rhs):
        row = (b & 1) << n  # bit n holds the right-hand side
        for v in e:
            row |= 1 << v
        for col, prow in pivots:
            if row >> col & 1:
                row ^= prow
        low = row & ((1 << n) - 1)
        if low == 0:
            if row >> n & 1:
                return None
            continue
        col = low.bit_length() - 1
        pivots = [(c, prow ^ row) if prow >> col & 1 else (c, prow) for c, prow in pivots]
        pivots.append((col, row))
    return tuple(sorted(col for col, prow in pivots if prow >> n & 1))


def odd_bipartition(h: Hypergraph) -> tuple[int, ...] | None:
    """A vertex class meeting every edge in an odd number of vertices, or None.

    For even k the complement then meets every edge oddly as well.
    """
    return parity_solution(h, [1] * h.m)


def switching_set(h: SignedHypergraph) -> tuple[int, ...] | None:
    """Vertices whose negation turns every edge sign to +1, or None.

    When it exists the signed tensor has the same H-spectrum as the unsigned one.
    """
    return parity_solution(h.base, [1 if s < 0 else 0 for s in h.signs])
