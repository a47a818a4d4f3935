from __future__ import annotations

import numpy as np
from hypothesis import given, settings, strategies as st

from splitham.canon import are_isomorphic, canonical_form
from splitham.equitable import Partition, coarsest_equitable, is_equitable, quotient
from splitham.graph import (
    Graph,
    build_graph,
    from_graph6,
    from_json,
    is_connected,
    split_witness,
    to_graph6,
    to_json,
)
from splitham.spectral import spectral_radius


@st.composite
def graphs(draw, n_min=0, n_max=12):
    n = draw(st.integers(n_min, n_max))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def relabelled(draw, n_max=12):
    g = draw(graphs(n_max=n_max))
    perm = draw(st.permutations(list(range(g.n))))
    return g, g.relabel(perm)


@st.composite
def connected_graphs(draw, n_max=14):
    g = draw(graphs(n_min=2, n_max=n_max))
    # chain consecutive components together
    seen, roots = 0, []
    for v in range(g.n):
        if not seen >> v & 1:
            comp, frontier = 0, 1 << v
            while frontier:
                comp |= frontier
                nxt = 0
                for u in range(g.n):
                    if frontier >> u & 1:
                        nxt |= g.adj[u]
                frontier = nxt & ~comp
            seen |= comp
            roots.append(v)
    extra = list(zip(roots, roots[1:]))
    return build_graph(g.n, list(g.edges) + extra)


@given(graphs(n_max=20))
def test_graph6_roundtrip(g: Graph):
    assert from_graph6(to_graph6(g)) == g
    assert from_json(to_json(g)) == g


@given(graphs())
def test_edge_count_is_half_degree_sum(g: Graph):
    assert 2 * g.edge_count == sum(g.degrees())


@given(relabelled())
def test_canonical_form_ignores_labels(pair):
    g, h = pair
    assert canonical_form(g) == canonical_form(h)
    assert are_isomorphic(g, h)


@settings(max_examples=60)
@given(graphs(n_max=8), graphs(n_max=8), graphs(n_max=8))
def test_isomorphism_is_an_equivalence(a, b, c):
    assert are_isomorphic(a, a)
    assert are_isomorphic(a, b) == are_isomorphic(b, a)
    if are_isomorphic(a, b) and are_isomorphic(b, c):
        assert are_isomorphic(a, c)


@given(connected_graphs())
def test_spectral_bounds(g: Graph):
    assert is_connected(g)
    rho = spectral_radius(g).rho
    degrees = g.degrees()
    assert np.mean(degrees) - 1e-9 <= rho <= max(degrees) + 1e-9
    assert abs(rho - np.linalg.eigvalsh(g.adjacency_matrix())[-1]) < 1e-10


@given(graphs(n_min=1))
def test_coarsest_equitable_is_equitable(g: Graph):
    p = coarsest_equitable(g)
    assert is_equitable(g, p)
    assert sorted(v for c in p.cells for v in c) == list(range(g.n))


@given(graphs(n_min=1))
def test_singleton_quotient_is_adjacency(g: Graph):
    q = quotient(g, Partition.of([[v] for v in range(g.n)]))
    assert np.array_equal(q.as_array(), g.adjacency_matrix())


@given(graphs(n_min=1, n_max=10))
def test_split_witness_is_valid(g: Graph):
    w = split_witness(g)
    if w is None:
        return
    k_mask = sum(1 << v for v in w.clique)
    i_mask = sum(1 << v for v in w.independent)
    assert k_mask | i_mask == g.vertex_mask and not k_mask & i_mask
    assert all(g.adj[v] & k_mask == k_mask & ~(1 << v) for v in w.clique)
    assert all(not g.adj[v] & i_mask for v in w.independent)
