import pytest

from cheegerkit import CheegerKitError, ParameterError, is_connected
from cheegerkit import generators as gen

# frozen output of random_regular(10, 3, seed=42); random.Random is platform independent
RR_10_3_42 = (
    (0, 1), (0, 3), (0, 5), (1, 2), (1, 3), (2, 5), (2, 6), (3, 4),
    (4, 6), (4, 9), (5, 7), (6, 8), (7, 8), (7, 9), (8, 9),
)


@pytest.mark.parametrize(
    "G, n, m",
    [
        (gen.cycle(7), 7, 7),
        (gen.path(5), 5, 4),
        (gen.complete(6), 6, 15),
        (gen.complete_bipartite(2, 3), 5, 6),
        (gen.barbell(5), 10, 21),
        (gen.lollipop(9, 3), 12, 39),
        (gen.hypercube(4), 16, 32),
    ],
)
def test_sizes(G, n, m):
    assert (G.n, G.m) == (n, m)
    assert is_connected(G)


def test_barbell_bridge():
    G = gen.barbell(5)
    assert G.has_edge(4, 5)
    assert sum(1 for u, v in G.edges if u < 5 <= v) == 1


def test_lollipop_tail():
    assert gen.lollipop(4, 2).edges[-2:] == ((3, 4), (4, 5))


def test_hypercube_neighbours_differ_in_one_bit():
    assert all(bin(u ^ v).count("1") == 1 for u, v in gen.hypercube(3).edges)


class TestRandomRegular:
    def test_frozen_output(self):
        assert gen.random_regular(10, 3, seed=42).edges == RR_10_3_42

    def test_regular_and_reproducible(self):
        for seed in range(5):
            G = gen.random_regular(12, 4, seed)
            assert all(G.degree(v) == 4 for v in G.vertices())
            assert G == gen.random_regular(12, 4, seed)

    def test_seeds_differ(self):
        assert gen.random_regular(16, 3, 1) != gen.random_regular(16, 3, 2)

    def test_invalid(self):
        with pytest.raises(CheegerKitError):
            gen.random_regular(5, 3, 0)
        with pytest.raises(CheegerKitError):
            gen.random_regular(4, 4, 0)


def test_generate_dispatch():
    assert gen.generate("cycle", 5) == gen.cycle(5)
    assert gen.generate("random_regular", 8, 3, seed=7) == gen.random_regular(8, 3, 7)
    with pytest.raises(ParameterError):
        gen.generate("cycle", 5, 6)
    with pytest.raises(ParameterError):
        gen.generate("torus", 3)
