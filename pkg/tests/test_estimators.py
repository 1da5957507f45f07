from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone

from cheegerkit import generators as gen
from cheegerkit.estimators import CheegerCut, ExpanderDecomposition, HypothesisViolated, StructureDecomposition
from cheegerkit.graph import Graph
from cheegerkit.validation import check_graph

B5 = gen.barbell(5)


def adjacency(G):
    a = np.zeros((G.n, G.n), dtype=int)
    for u, v in G.edges:
        a[u, v] = a[v, u] = 1
    return a


class TestCheegerCut:
    def test_barbell(self):
        est = CheegerCut().fit(B5)
        assert est.value_ == Fraction(1, 5)
        assert est.labels_.tolist() == [1] * 5 + [0] * 5

    def test_accepts_adjacency_matrix(self):
        assert CheegerCut().fit(adjacency(B5)).realizer_ == CheegerCut().fit(B5).realizer_

    def test_params_roundtrip(self):
        est = CheegerCut(heuristic=True, random_state=3)
        assert est.get_params() == {"exact_cap": 24, "heuristic": True, "random_state": 3, "n_iter": 1000}
        twin = clone(est).set_params(n_iter=50)
        assert twin.n_iter == 50 and est.n_iter == 1000
        assert not twin.fit(B5).exact_


class TestExpanderDecomposition:
    def test_fit_predict(self):
        est = ExpanderDecomposition(epsilon="1/4", alpha="3/10")
        labels = est.fit_predict(B5)
        assert labels.tolist() == [0] * 5 + [1] * 5
        assert est.n_parts_ == 2 and est.delta_ == Fraction(3, 32)
        assert est.report_.ok and len(est.parts_) == 2

    def test_witness(self):
        est = ExpanderDecomposition(epsilon=Fraction(1, 2), alpha=Fraction(2, 5)).fit(gen.lollipop(8, 4))
        assert est.labels_ is None and est.witness_ == {8, 9, 10, 11}
        with pytest.raises(HypothesisViolated):
            est.fit_predict(gen.lollipop(8, 4))

    def test_float_parameters_rejected(self):
        with pytest.raises(Exception, match="float"):
            ExpanderDecomposition(epsilon=0.25).fit(B5)


class TestStructureDecomposition:
    def test_lollipop(self):
        est = StructureDecomposition(alpha=Fraction(1, 3)).fit(gen.lollipop(9, 3))
        assert est.folner_set_ == {9, 10, 11}
        assert est.labels_.tolist() == [0] * 9 + [-1] * 3

    def test_failure(self):
        est = StructureDecomposition(alpha=Fraction(1, 3)).fit(gen.cycle(8))
        assert est.labels_ is None and est.failure_ == "maximal Følner set not α-small"


def test_check_graph_inputs():
    assert check_graph(adjacency(B5)) == B5
    assert check_graph(B5) is B5
    assert check_graph(Graph(3)).n == 3
