from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
import pytest

from conftest import random_graph
from splitham.cycles import cyclable_sets, is_fully_cycle_extendable, is_hamiltonian
from splitham.families import build_family, family
from splitham.graph import Graph, GraphError, SizeBoundError, build_graph, complete_graph


def cycle(n: int) -> Graph:
    return build_graph(n, [(j, (j + 1) % n) for j in range(n)])


def brute_hamiltonian(g: Graph) -> bool:
    if g.n < 3:
        return False
    for rest in permutations(range(1, g.n)):
        order = (0, *rest)
        if all(g.has_edge(order[j], order[(j + 1) % g.n]) for j in range(g.n)):
            return True
    return False


def brute_cycles(g: Graph) -> set[frozenset[int]]:
    """Vertex sets of all cycles, by walking every closed path from its least vertex."""
    found: set[frozenset[int]] = set()

    def walk(start: int, path: list[int]) -> None:
        last = path[-1]
        for w in g.neighbors(last):
            if w == start and len(path) >= 3:
                found.add(frozenset(path))
            elif w > start and w not in path:
                walk(start, path + [w])

    for s in range(g.n):
        walk(s, [s])
    return found


def brute_fce(g: Graph) -> bool:
    cycles = brute_cycles(g)
    for v in range(g.n):
        if not any(v in c and len(c) == 3 for c in cycles):
            return False
    for c in cycles:
        if len(c) < g.n and not any(len(d) == len(c) + 1 and c < d for d in cycles):
            return False
    return True


class TestHamiltonian:
    def test_examples(self):
        assert is_hamiltonian(cycle(5))
        assert not is_hamiltonian(build_family(family("G", 8, 3)))
        assert not is_hamiltonian(build_family(family("GammaP", 6, 3)))
        assert not is_hamiltonian(build_graph(1, []))
        assert not is_hamiltonian(complete_graph(2))
        assert is_hamiltonian(complete_graph(3))

    def test_against_permutations(self, rng):
        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 8), rng.uniform(0.2, 0.9))
            assert is_hamiltonian(g) == brute_hamiltonian(g)

    def test_petersen(self):
        p = nx.petersen_graph()
        assert not is_hamiltonian(build_graph(10, p.edges))

    def test_bounds(self):
        with pytest.raises(SizeBoundError):
            is_hamiltonian(build_graph(25, []))
        with pytest.raises(GraphError):
            is_hamiltonian(build_graph(0, []))


class TestExtendable:
    def test_examples(self):
        assert is_fully_cycle_extendable(complete_graph(4))
        assert not is_fully_cycle_extendable(build_family(family("G", 8, 3)))
        assert is_fully_cycle_extendable(build_family(family("CompleteSplit", 3, 2)))

    def test_cyclable_sets_match_cycle_walk(self, rng):
        for _ in range(100):
            g = random_graph(rng, rng.randint(3, 7), rng.uniform(0.3, 0.9))
            table = cyclable_sets(g)
            expected = {sum(1 << v for v in c) for c in brute_cycles(g)}
            assert {m for m in range(1 << g.n) if table[m]} == expected

    def test_against_cycle_enumeration(self, rng):
        for _ in range(300):
            g = random_graph(rng, rng.randint(3, 7), rng.uniform(0.3, 1.0))
            assert is_fully_cycle_extendable(g) == brute_fce(g)

    def test_non_extendable_hamiltonian_graph(self):
        # C_5 plus one chord: Hamiltonian, but three vertices lie on no triangle
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
        assert is_hamiltonian(g) and not is_fully_cycle_extendable(g)

    def test_bound(self):
        with pytest.raises(SizeBoundError):
            is_fully_cycle_extendable(complete_graph(11))

    def test_all_small_triples(self):
        for edges in combinations(list(combinations(range(4), 2)), 4):
            g = build_graph(4, edges)
            assert is_fully_cycle_extendable(g) == brute_fce(g)
