"""Input validation helpers.

These mirror scikit-learn's ``check_array`` family: they accept the loose
inputs users pass around and return the canonical objects the algorithms
work on, raising early with a readable message otherwise.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Integral, Rational

import numpy as np

from .exceptions import DomainError, ParameterError
from .graph import Graph

__all__ = ["check_ratio", "check_graph", "check_vertex_set"]

_RATIO_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def check_ratio(value, name="value", *, positive=False, allow_zero=True) -> Fraction:
    """Coerce ``value`` to an exact non-negative :class:`Fraction`.

    Accepts integers, ``Fraction`` and strings ``"p/q"`` or ``"p"``.  Floats
    and decimal strings are rejected: certificates must stay exact.
    """
    if isinstance(value, bool):
        raise ParameterError(f"{name} must be a rational, got bool")
    if isinstance(value, str):
        match = _RATIO_RE.match(value)
        if not match:
            raise ParameterError(f"{name} must be written as 'p/q' with integers, got {value!r}")
        num, den = int(match.group(1)), int(match.group(2) or 1)
        if den == 0:
            raise ParameterError(f"{name} has zero denominator")
        result = Fraction(num, den)
    elif isinstance(value, (Integral, Rational)):
        result = Fraction(value)
    else:
        raise ParameterError(
            f"{name} must be an int, Fraction or 'p/q' string, got {type(value).__name__}"
        )
    if result < 0:
        raise ParameterError(f"{name} must be non-negative, got {result}")
    if (positive or not allow_zero) and result == 0:
        raise ParameterError(f"{name} must be positive")
    return result


def check_graph(X, n=None) -> Graph:
    """Return ``X`` as a :class:`Graph`.

    ``X`` may be a ``Graph``, a symmetric 0/1 adjacency matrix (dense or
    scipy sparse), a ``networkx`` graph on nodes ``0..n-1``, or an iterable of
    edges together with ``n``.
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "tocoo"):
        X = X.toarray()
    if hasattr(X, "nodes") and hasattr(X, "edges"):
        nodes = sorted(X.nodes())
        if nodes != list(range(len(nodes))):
            raise DomainError("networkx graph nodes must be exactly 0..n-1")
        return Graph.from_edges(len(nodes), X.edges())
    if isinstance(X, np.ndarray):
        if X.ndim != 2 or X.shape[0] != X.shape[1]:
            raise DomainError(f"adjacency matrix must be square, got shape {X.shape}")
        if not np.array_equal(X, X.T):
            raise DomainError("adjacency matrix must be symmetric")
        if np.any(np.diag(X) != 0):
            raise DomainError("adjacency matrix has loops on the diagonal")
        if not np.isin(X, (0, 1)).all():
            raise DomainError("adjacency matrix must be 0/1 (weighted graphs unsupported)")
        us, vs = np.nonzero(np.triu(X, 1))
        return Graph.from_edges(X.shape[0], zip(us.tolist(), vs.tolist()))
    if n is None:
        raise DomainError("an edge iterable needs an explicit vertex count n")
    return Graph.from_edges(n, X)


def check_vertex_set(G: Graph, A, name="A", *, nonempty=False) -> frozenset[int]:
    try:
        A = frozenset(int(v) for v in A)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be an iterable of vertex indices") from None
    bad = [v for v in A if not 0 <= v < G.n]
    if bad:
        raise DomainError(f"{name} references vertices outside 0..{G.n - 1}: {sorted(bad)}")
    if nonempty and not A:
        raise DomainError(f"{name} must be nonempty")
    return A
