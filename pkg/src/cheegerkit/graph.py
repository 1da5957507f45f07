"""Finite simple undirected graphs on vertices ``0..n-1``.

Vertex subsets are plain ``frozenset`` objects.  Edges are ``(u, v)`` tuples
with ``u < v``; edge sets returned by the boundary operators are frozensets of
such tuples.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .exceptions import DomainError, GraphParseError

__all__ = [
    "Graph",
    "parse_graph",
    "format_graph",
    "boundary",
    "relative_boundary",
    "induced_subgraph",
    "max_degree",
    "all_pairs_distances",
    "is_connected",
    "canonical_key",
]


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Use :meth:`from_edges` to build one from an arbitrary edge iterable; the
    raw constructor expects ``edges`` already normalised (sorted, ``u < v``).
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"vertex count must be non-negative, got {self.n}")
        prev = None
        for e in self.edges:
            u, v = e
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise DomainError(f"edge {e} is not normalised or out of range for n={self.n}")
            if prev is not None and e <= prev:
                raise DomainError("edges must be sorted and unique; use Graph.from_edges")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            e = _norm_edge(u, v)
            if e in seen:
                raise DomainError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an integer bitmask."""
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def vertices(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def canonical_key(vertices: Iterable[int]) -> tuple[int, ...]:
    """Sort key realising the canonical (lexicographic) order on subsets."""
    return tuple(sorted(vertices))


def _check_subset(G: Graph, A: Iterable[int], name: str = "A") -> frozenset[int]:
    A = frozenset(A)
    for v in A:
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise DomainError(f"{name} references vertex {v!r} outside 0..{G.n - 1}")
    return A


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    The first non-comment line is ``"n m"``; exactly ``m`` edge lines
    ``"u v"`` follow.  Lines starting with ``#`` and blank lines are ignored.
    """
    header = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError("malformed line (expected two integers)", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("malformed line (non-integer token)", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("negative count in header", lineno)
            header = (a, b)
            continue
        n = header[0]
        if a < 0 or b < 0 or a >= n or b >= n:
            raise GraphParseError(f"vertex index out of range 0..{n - 1}", lineno)
        if a == b:
            raise GraphParseError("loop", lineno)
        e = _norm_edge(a, b)
        if e in seen:
            raise GraphParseError(f"duplicate edge (first seen at line {seen[e]})", lineno)
        seen[e] = lineno
        edges.append(e)
    if header is None:
        raise GraphParseError("missing header line 'n m'")
    if len(edges) != header[1]:
        raise GraphParseError(f"header declares {header[1]} edges but {len(edges)} were given")
    return Graph(header[0], tuple(sorted(edges)))


def format_graph(G: Graph) -> str:
    """Serialise ``G`` in the normalised edge-list format (sorted edges, LF)."""
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def boundary(G: Graph, A: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Edges with exactly one endpoint in ``A``."""
    A = _check_subset(G, A)
    return frozenset(e for e in G.edges if (e[0] in A) != (e[1] in A))


def relative_boundary(G: Graph, A: Iterable[int], B: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Edges of ``G`` joining a vertex of ``A`` to a vertex of ``B \\ A``."""
    A = _check_subset(G, A)
    B = _check_subset(G, B, "B")
    target = B - A
    out = set()
    for u, v in G.edges:
        if (u in A and v in target) or (v in A and u in target):
            out.add((u, v))
    return frozenset(out)


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``S`` keeping every edge with both endpoints in ``S``.

    Returns ``(H, index)`` where ``index[i]`` is the original vertex that
    became vertex ``i`` of ``H`` (``index`` is increasing).
    """
    S = _check_subset(G, S, "S")
    if not S:
        raise DomainError("induced subgraph of an empty vertex set")
    index = tuple(sorted(S))
    pos = {v: i for i, v in enumerate(index)}
    edges = tuple(sorted((pos[u], pos[v]) for u, v in G.edges if u in pos and v in pos))
    return Graph(len(index), edges), index


def max_degree(G: Graph) -> int:
    return max((len(a) for a in G.adjacency), default=0)


def all_pairs_distances(G: Graph) -> list[list[float | int]]:
    """Breadth-first distances; unreachable pairs hold ``math.inf``."""
    table = []
    adj = G.adjacency
    for s in range(G.n):
        dist: list[float | int] = [math.inf] * G.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] == math.inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        table.append(dist)
    return table


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in G.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.n
