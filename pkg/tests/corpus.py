"""Named test graphs shared by the suites."""

import random

from cheegerkit import Graph, is_connected
from cheegerkit import generators as gen


def named_graphs(max_n):
    """``{name: graph}`` for every corpus member with at most ``max_n`` vertices."""
    out = {}

    def put(name, G):
        if G.n <= max_n:
            out[name] = G

    for n in range(3, 19):
        put(f"C{n}", gen.cycle(n))
    for n in range(2, 19):
        put(f"P{n}", gen.path(n))
    for n in range(2, 11):
        put(f"K{n}", gen.complete(n))
    for a, b in [(1, 3), (2, 2), (2, 3), (3, 3), (2, 5), (3, 4), (4, 4), (3, 6), (5, 5)]:
        put(f"K{a},{b}", gen.complete_bipartite(a, b))
    for m in range(3, 10):
        put(f"barbell{m}", gen.barbell(m))
    for m, p in [(4, 2), (5, 3), (6, 2), (6, 4), (8, 4), (9, 3), (7, 5), (10, 4), (12, 4)]:
        put(f"lollipop{m},{p}", gen.lollipop(m, p))
    for d in range(1, 5):
        put(f"Q{d}", gen.hypercube(d))
    for n, d, seed in [(6, 3, 1), (8, 3, 7), (10, 3, 42), (12, 3, 5), (12, 4, 9), (14, 3, 3), (16, 3, 11), (18, 3, 2)]:
        put(f"rr{n},{d},{seed}", gen.random_regular(n, d, seed))
    put("petersen", Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                                      + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                                      + [(i, i + 5) for i in range(5)]))
    put("two_edges", Graph.from_edges(4, [(0, 1), (2, 3)]))
    put("star5", Graph.from_edges(6, [(0, i) for i in range(1, 6)]))
    return out


def connected_graphs(max_n):
    return {k: G for k, G in named_graphs(max_n).items() if is_connected(G) and G.n >= 2}


def random_graphs(count, n_range=(2, 12), p=0.5, seed=20240601):
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(*n_range)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        graphs.append(Graph.from_edges(n, edges))
    return graphs


def qi_instances():
    """``{name: (X, Y, f, L, A)}`` maps that are quasi-isometries by construction."""
    out = {}
    for name, G in connected_graphs(12).items():
        out[f"id:{name}"] = (G, G, tuple(range(G.n)), 1, 0)
    for n in (3, 4, 5, 6, 8):
        out[f"C{2 * n}->C{n}"] = (gen.cycle(2 * n), gen.cycle(n), tuple(i % n for i in range(2 * n)), 1, n)
        out[f"C{n}->C{2 * n}"] = (gen.cycle(n), gen.cycle(2 * n), tuple(2 * i for i in range(n)), 2, 1)
        out[f"P{n}->P{2 * n}"] = (gen.path(n), gen.path(2 * n), tuple(2 * i for i in range(n)), 2, 1)
    for m in (3, 5, 7):
        out[f"barbell{m}->K2"] = (gen.barbell(m), gen.complete(2), tuple(int(i >= m) for i in range(2 * m)), 1, 2)
    for d in (2, 3, 4):
        out[f"Q{d}->Q{d - 1}"] = (gen.hypercube(d), gen.hypercube(d - 1), tuple(i >> 1 for i in range(2**d)), 1, 1)
    # long enough that beta |Y| > 1, so the preimage check is not vacuous
    for n in (64, 128):
        out[f"id:C{n}"] = (gen.cycle(n), gen.cycle(n), tuple(range(n)), 1, 0)
        out[f"id:P{n}"] = (gen.path(n), gen.path(n), tuple(range(n)), 1, 0)
    out["lollipop6,4->P5"] = (gen.lollipop(6, 4), gen.path(5), tuple(max(0, i - 5) for i in range(10)), 1, 2)
    return out
