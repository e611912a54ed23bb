"""Simple undirected graphs: model, edge-list format, matrix views.

Edge-list format::

    # comment
    n 10          optional header; raises the vertex count
    0 1
    1 2

Vertices are dense 0-based integers.  Without an ``n`` header the vertex
count is ``1 + max id`` and every id below it must occur in some edge
(gaps are rejected unless ``compact=True``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import ParseError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    degree: tuple[int, ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and out-of-range ids."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        deg = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            deg[u] += 1
            deg[v] += 1
        return cls(n, frozenset(seen), tuple(deg))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def min_degree(self) -> int:
        return min(self.degree) if self.n else 0

    @property
    def average_degree(self) -> float:
        return 2.0 * self.m / self.n if self.n else 0.0

    def is_regular(self) -> bool:
        return self.n > 0 and len(set(self.degree)) == 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(vertices))
        return not any(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def check_vertex_set(g_or_n, vertices: Iterable[int]) -> list[int]:
    n = g_or_n if isinstance(g_or_n, int) else g_or_n.n
    vs = sorted(set(int(v) for v in vertices))
    bad = [v for v in vs if not 0 <= v < n]
    if bad:
        raise ValueError(f"vertices {bad} out of range for n={n}")
    return vs


def _parse_int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"non-integer token {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative vertex id {value}", lineno)
    return value


def parse_graph(text: str, *, compact: bool = False) -> Graph:
    """Parse an edge-list document into a :class:`Graph`."""
    header_n: int | None = None
    pairs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2:
                raise ParseError("header must be 'n <N>'", lineno)
            if header_n is not None or pairs:
                raise ParseError("'n' header must precede all edges and appear once", lineno)
            header_n = _parse_int(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {len(tokens)} tokens", lineno)
        u, v = (_parse_int(t, lineno) for t in tokens)
        pairs.append((u, v, lineno))

    used = sorted({u for u, _, _ in pairs} | {v for _, v, _ in pairs})
    if compact and header_n is None:
        relabel = {old: new for new, old in enumerate(used)}
        pairs = [(relabel[u], relabel[v], ln) for u, v, ln in pairs]
        used = list(range(len(used)))
    n = used[-1] + 1 if used else 0
    if header_n is not None:
        n = max(n, header_n)
    elif len(used) != n:
        missing = sorted(set(range(n)) - set(used))
        raise ParseError(
            f"vertex ids are not dense (missing {missing[:5]}); add an 'n' header or compact ids"
        )

    seen: set[tuple[int, int]] = set()
    for u, v, lineno in pairs:
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(f"duplicate edge {e}", lineno)
        seen.add(e)
    return Graph.from_edges(n, seen)


def serialize_graph(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    if g.edges:
        idx = np.array(g.sorted_edges())
        a[idx[:, 0], idx[:, 1]] = 1.0
        a[idx[:, 1], idx[:, 0]] = 1.0
    return a


def laplacian_matrix(g: Graph) -> np.ndarray:
    return np.diag(np.array(g.degree, dtype=float)) - adjacency_matrix(g)


# -- small named families -------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at index 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def circulant_graph(n: int, offsets: Iterable[int]) -> Graph:
    edges = set()
    for s in offsets:
        s %= n
        if s == 0:
            raise ValueError("offset 0 would create self-loops")
        for i in range(n):
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
