"""Deterministic graph families used as a test corpus.

Vertex numbering is part of the contract, since certificates name vertices:

* ``barbell(m)``: cliques on ``0..m-1`` and ``m..2m-1`` joined by ``(m-1, m)``.
* ``lollipop(m, p)``: clique on ``0..m-1``, path ``m..m+p-1`` hanging off
  vertex ``m-1``.
* ``hypercube(d)``: vertices are ``d``-bit integers, adjacent when they
  differ in one bit.
"""

from __future__ import annotations

import random
from itertools import combinations

from .exceptions import CheegerKitError, ParameterError
from .graph import Graph

__all__ = [
    "FAMILIES",
    "cycle",
    "path",
    "complete",
    "complete_bipartite",
    "barbell",
    "lollipop",
    "hypercube",
    "random_regular",
    "generate",
]

RETRY_CAP = 1000


def _need(cond, msg):
    if not cond:
        raise ParameterError(msg)


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete_bipartite needs both sides >= 1")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def barbell(m: int) -> Graph:
    _need(m >= 2, "barbell needs cliques of size >= 2")
    edges = list(combinations(range(m), 2))
    edges += [(m + u, m + v) for u, v in combinations(range(m), 2)]
    edges.append((m - 1, m))
    return Graph.from_edges(2 * m, edges)


def lollipop(m: int, p: int) -> Graph:
    _need(m >= 2 and p >= 1, "lollipop needs a clique of size >= 2 and a path of length >= 1")
    edges = list(combinations(range(m), 2))
    edges += [(m - 1 + i, m + i) for i in range(p)]
    return Graph.from_edges(m + p, edges)


def hypercube(d: int) -> Graph:
    _need(d >= 0, "hypercube dimension must be >= 0")
    n = 1 << d
    return Graph.from_edges(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)))


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Uniform ``d``-regular graph on ``n`` vertices via the configuration model.

    Stub pairings containing a loop or a repeated edge are rejected and
    redrawn, at most ``RETRY_CAP`` times.  Uses :class:`random.Random`, whose
    output for a given integer seed does not depend on the platform.
    """
    _need(0 <= d < n, "random_regular requires 0 <= d < n")
    _need(n * d % 2 == 0, "random_regular requires n*d even")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(RETRY_CAP):
        rng.shuffle(stubs)
        edges = set()
        for u, v in zip(stubs[::2], stubs[1::2]):
            e = (u, v) if u < v else (v, u)
            if u == v or e in edges:
                break
            edges.add(e)
        else:
            return Graph(n, tuple(sorted(edges)))
    raise CheegerKitError(f"random_regular({n}, {d}) failed after {RETRY_CAP} attempts")


FAMILIES = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "barbell": (barbell, 1),
    "lollipop": (lollipop, 2),
    "hypercube": (hypercube, 1),
    "random_regular": (random_regular, 2),
}


def generate(family: str, *params: int, seed: int = 0) -> Graph:
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    fn, arity = FAMILIES[family]
    if len(params) != arity:
        raise ParameterError(f"{family} takes {arity} size parameter(s), got {len(params)}")
    if family == "random_regular":
        return fn(*params, seed=seed)
    return fn(*params)
