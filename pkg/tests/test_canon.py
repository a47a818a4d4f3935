from __future__ import annotations

import time

import networkx as nx
import pytest

from conftest import random_graph
from splitham.canon import are_isomorphic, canonical_form, refine
from splitham.families import build_family, extra_edge_p5, family
from splitham.graph import SizeBoundError, add_edges, build_graph, complete_graph


def shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_relabel_invariance(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 14), rng.random())
        assert canonical_form(g) == canonical_form(shuffled(g, rng))


def test_agrees_with_networkx(rng):
    for _ in range(300):
        n = rng.randint(4, 9)
        m = rng.randint(0, n * (n - 1) // 2)
        a = nx.gnm_random_graph(n, m, seed=rng.randrange(10**9))
        b = nx.gnm_random_graph(n, m, seed=rng.randrange(10**9))
        ga, gb = build_graph(n, a.edges), build_graph(n, b.edges)
        assert are_isomorphic(ga, gb) == nx.is_isomorphic(a, b)


def test_cospectral_regular_pair():
    # 4x4 rook graph and Shrikhande graph share all parameters but differ
    rook = nx.convert_node_labels_to_integers(nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4)))
    shrikhande = build_graph(16, [
        (4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4)
        for a in range(4) for b in range(4)
        for da, db in ((0, 1), (1, 0), (1, 1))
    ])
    g = build_graph(16, rook.edges)
    assert sorted(g.degrees()) == sorted(shrikhande.degrees())
    assert not are_isomorphic(g, shrikhande)


def test_symmetric_graphs_are_fast(rng):
    cube = nx.convert_node_labels_to_integers(nx.hypercube_graph(4))
    start = time.perf_counter()
    for g in (complete_graph(16), build_graph(16, []), build_graph(16, cube.edges)):
        assert canonical_form(g) == canonical_form(shuffled(g, rng))
    assert time.perf_counter() - start < 2.0


@pytest.mark.parametrize("n", range(10, 17))
def test_primed_plus_edge_is_double_primed(n):
    g = add_edges(build_family(family("GammaP", n, 5)), [extra_edge_p5(n)])
    assert are_isomorphic(g, build_family(family("GammaPP", n, 5)))


def test_distinct_families():
    assert not are_isomorphic(build_family(family("Gamma", 8, 4)), build_family(family("GammaP", 8, 4)))


def test_size_bound():
    with pytest.raises(SizeBoundError):
        are_isomorphic(complete_graph(17), complete_graph(17))


def test_refine_is_equitable(rng):
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 12), rng.random())
        cells = refine(g, [list(range(g.n))])
        masks = [sum(1 << v for v in c) for c in cells]
        for cell in cells:
            for m in masks:
                assert len({bin(g.adj[v] & m).count("1") for v in cell}) == 1
