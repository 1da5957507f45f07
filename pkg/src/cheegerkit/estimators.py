"""scikit-learn style wrappers.

The estimators treat a whole graph as the input ``X`` (a :class:`Graph`, an
adjacency matrix, or a networkx graph), so they behave like graph
clustering estimators: ``fit`` computes a certified partition and
``labels_`` assigns each vertex to a part.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from ._subsets import DEFAULT_EXACT_CAP
from .cheeger import cheeger, heuristic_cheeger
from .decompose import Status, decompose, verify_decomposition
from .exceptions import CheegerKitError
from .structure import structure_decompose
from .validation import check_graph, check_ratio

__all__ = ["CheegerCut", "ExpanderDecomposition", "StructureDecomposition", "HypothesisViolated"]


class HypothesisViolated(CheegerKitError):
    """The graph has an α-small ε-Følner set, so no partition was produced."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"graph has an alpha-small Følner set: {sorted(witness)}")


class CheegerCut(BaseEstimator, ClusterMixin):
    """Cheeger constant of a graph and a set realizing it.

    Parameters
    ----------
    exact_cap : int, default=24
        Largest vertex count for exhaustive search.
    heuristic : bool, default=False
        Use seeded local search instead (an upper bound, ``exact_ = False``).
    random_state : int, default=0
    n_iter : int, default=1000

    Attributes
    ----------
    value_ : Fraction or inf
    realizer_ : frozenset of int
    labels_ : ndarray of shape (n_vertices,)
        1 on the realizer, 0 elsewhere.
    """

    def __init__(self, exact_cap=DEFAULT_EXACT_CAP, heuristic=False, random_state=0, n_iter=1000):
        self.exact_cap = exact_cap
        self.heuristic = heuristic
        self.random_state = random_state
        self.n_iter = n_iter

    def fit(self, X, y=None):
        G = check_graph(X)
        if self.heuristic:
            res = heuristic_cheeger(G, self.random_state, self.n_iter)
        else:
            res = cheeger(G, self.exact_cap)
        self.graph_ = G
        self.value_ = res.value
        self.realizer_ = res.realizer
        self.exact_ = res.exact
        self.labels_ = np.zeros(G.n, dtype=int)
        if res.realizer:
            self.labels_[sorted(res.realizer)] = 1
        return self


class ExpanderDecomposition(BaseEstimator, ClusterMixin):
    """Partition a graph into α-big parts that are certified expanders.

    Parameters
    ----------
    epsilon : Fraction, int or "p/q" str
        Følner threshold.
    alpha : Fraction, int or "p/q" str
        Smallness level, ``0 < alpha <= 1/2``.
    exact_cap : int, default=24
    verify : bool, default=True
        Recheck the result independently after fitting.

    Attributes
    ----------
    result_ : DecompositionResult
    labels_ : ndarray of shape (n_vertices,) or None
        Part index per vertex; ``None`` when a witness was found.
    n_parts_ : int
    delta_ : Fraction or None
        Expansion guaranteed for every part.
    witness_ : frozenset or None
    """

    def __init__(self, epsilon=Fraction(1, 2), alpha=Fraction(1, 4), exact_cap=DEFAULT_EXACT_CAP, verify=True):
        self.epsilon = epsilon
        self.alpha = alpha
        self.exact_cap = exact_cap
        self.verify = verify

    def fit(self, X, y=None):
        G = check_graph(X)
        eps = check_ratio(self.epsilon, "epsilon", positive=True)
        alpha = check_ratio(self.alpha, "alpha", positive=True)
        res = decompose(G, eps, alpha, self.exact_cap)
        if self.verify:
            report = verify_decomposition(G, eps, alpha, res, self.exact_cap)
            if not report.ok:
                raise CheegerKitError(f"decomposition failed verification: {report.failures}")
            self.report_ = report
        self.result_ = res
        self.witness_ = res.witness
        self.n_parts_ = res.k
        self.delta_ = res.delta
        self.labels_ = None if res.status is Status.WITNESS else np.asarray(res.labels, dtype=int)
        return self

    def fit_predict(self, X, y=None):
        self.fit(X)
        if self.labels_ is None:
            raise HypothesisViolated(self.witness_)
        return self.labels_

    @property
    def parts_(self):
        check_is_fitted(self, "result_")
        return self.result_.parts


class StructureDecomposition(BaseEstimator, ClusterMixin):
    """Split off a maximal Følner set ``F`` and decompose the rest into expanders.

    ``labels_`` is -1 on ``F`` and the part index elsewhere; it is ``None``
    (with ``failure_`` set) when ``F`` is missing or not α-small.
    """

    def __init__(self, epsilon=Fraction(1, 2), alpha=Fraction(1, 4), exact_cap=DEFAULT_EXACT_CAP):
        self.epsilon = epsilon
        self.alpha = alpha
        self.exact_cap = exact_cap

    def fit(self, X, y=None):
        G = check_graph(X)
        res = structure_decompose(G, self.epsilon, self.alpha, self.exact_cap)
        self.result_ = res if res else None
        self.failure_ = None if res else res.reason
        if not res:
            self.labels_ = None
            self.folner_set_ = res.F
            return self
        self.folner_set_ = res.F
        self.delta_ = res.delta
        labels = np.full(G.n, -1, dtype=int)
        for i, part in enumerate(res.parts):
            labels[sorted(part.vertices)] = i
        self.labels_ = labels
        return self
