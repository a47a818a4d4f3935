from __future__ import annotations

import numpy as np
import pytest

from conftest import random_graph
from splitham.families import build_family, family
from splitham.graph import GraphError, build_graph, complete_graph, is_connected
from splitham.spectral import ConvergenceError, Ordering, compare_rho, spectral_radius


def fam(name, n, t):
    return build_family(family(name, n, t))


def test_complete_graph():
    assert spectral_radius(complete_graph(6)).rho == pytest.approx(5.0, abs=1e-12)


def test_star():
    star = build_graph(5, [(0, j) for j in range(1, 5)])
    assert spectral_radius(star).rho == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize("name,n,t,value", [("Gamma", 8, 4, 4.5722), ("Gamma", 10, 5, 5.8346)])
def test_family_values(name, n, t, value):
    assert abs(spectral_radius(fam(name, n, t)).rho - value) <= 5e-4


def test_against_dense_eigensolver(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 16), rng.uniform(0.1, 0.9))
        if not is_connected(g):
            continue
        res = spectral_radius(g)
        a = g.adjacency_matrix()
        assert res.rho == pytest.approx(np.linalg.eigvalsh(a)[-1], abs=1e-10)
        assert np.all(res.vector > 0)
        assert np.linalg.norm(res.vector) == pytest.approx(1.0)
        assert np.max(np.abs(a @ res.vector - res.rho * res.vector)) <= 1e-12
        degrees = g.degrees()
        assert np.mean(degrees) - 1e-9 <= res.rho <= max(degrees) + 1e-9
        assert res.rho >= np.sqrt(max(degrees)) - 1e-9


def test_slow_mixing_graphs_converge():
    # path and barbell have a small spectral gap
    path = build_graph(40, [(j, j + 1) for j in range(39)])
    assert spectral_radius(path).rho == pytest.approx(2 * np.cos(np.pi / 41), abs=1e-12)
    barbell = build_graph(20, [(a, b) for a in range(10) for b in range(a + 1, 10)]
                          + [(a, b) for a in range(10, 20) for b in range(a + 1, 20)] + [(9, 10)])
    assert spectral_radius(barbell).rho == pytest.approx(np.linalg.eigvalsh(barbell.adjacency_matrix())[-1], abs=1e-10)


def test_bipartite_does_not_oscillate():
    even_cycle = build_graph(6, [(j, (j + 1) % 6) for j in range(6)])
    assert spectral_radius(even_cycle).rho == pytest.approx(2.0, abs=1e-12)


def test_degenerate_inputs():
    assert spectral_radius(build_graph(1, [])).rho == 0.0
    with pytest.raises(GraphError):
        spectral_radius(build_graph(0, []))
    with pytest.raises(GraphError):
        spectral_radius(build_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        spectral_radius(complete_graph(3), tol=0)


def test_max_iter_exhaustion():
    path = build_graph(30, [(j, j + 1) for j in range(29)])
    with pytest.raises(ConvergenceError):
        spectral_radius(path, max_iter=3)


def test_deterministic():
    g = fam("GammaStar", 14, 6)
    a, b = spectral_radius(g), spectral_radius(g)
    assert a.rho == b.rho and np.array_equal(a.vector, b.vector)


class TestCompare:
    def test_greater(self):
        assert compare_rho(fam("Gamma", 6, 2), fam("GammaP", 6, 2)).ordering is Ordering.GREATER

    def test_self_indistinguishable(self):
        g = fam("Gamma", 9, 4)
        cmp = compare_rho(g, g)
        assert cmp.ordering is Ordering.INDISTINGUISHABLE and cmp.gap == 0

    def test_less(self):
        assert compare_rho(fam("Gamma", 6, 3), fam("GammaP", 6, 3)).ordering is Ordering.LESS

    def test_margin_guard(self):
        with pytest.raises(ValueError):
            compare_rho(complete_graph(3), complete_graph(3), margin=1e-12, tol=1e-12)

    def test_relabel_invariance(self, rng):
        g, h = fam("Gamma", 11, 5), fam("GammaPP", 11, 5)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert compare_rho(g, h).ordering is compare_rho(g.relabel(perm), h).ordering is Ordering.GREATER
