"""Undirected simple graphs stored as per-vertex adjacency bitsets.

Vertex ``v`` is bit ``1 << v``.  Python ints are unbounded, so the bitsets work
for any order; the enumeration paths stay well below 64 vertices.
"""
from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction or precondition violation."""


class SizeBoundError(GraphError):
    """Input exceeds the order an exact routine is allowed to handle."""


class Graph6Error(GraphError):
    """Malformed or unsupported graph6 text."""


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {u} has a neighbour outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.adj[u]))

    def degree(self, u: int) -> int:
        return popcount(self.adj[u])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def induced(self, mask: int) -> Graph:
        """Subgraph induced on the vertices of ``mask``, relabelled in increasing order."""
        keep = list(iter_bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        return build_graph(
            len(keep),
            [(index[u], index[v]) for u, v in self.edges if u in index and v in index],
        )

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``u`` renamed ``perm[u]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of the vertices")
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def add_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    """Return ``g`` plus the given non-edges."""
    new = list(g.edges)
    for u, v in edges:
        if g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is already an edge")
        new.append((u, v))
    return build_graph(g.n, new)


def remove_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    drop = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        drop.add((min(u, v), max(u, v)))
    return build_graph(g.n, [e for e in g.edges if e not in drop])


def rotate_edges(g: Graph, v: int, targets: Iterable[int], u: int) -> Graph:
    """Move the edges ``vw`` (``w`` in targets) over to ``uw``.

    Every target must be a neighbour of ``v`` outside the closed neighbourhood
    of ``u``.
    """
    if u == v:
        raise GraphError("rotation needs two distinct vertices")
    targets = sorted(set(targets))
    for w in targets:
        if not g.has_edge(v, w):
            raise GraphError(f"target {w} is not adjacent to {v}")
        if w == u or g.has_edge(u, w):
            raise GraphError(f"target {w} is already in the closed neighbourhood of {u}")
    adj = list(g.adj)
    for w in targets:
        adj[v] &= ~(1 << w)
        adj[w] &= ~(1 << v)
        adj[u] |= 1 << w
        adj[w] |= 1 << u
    return Graph(g.n, tuple(adj))


# -- graph6 --------------------------------------------------------------------

_G6_MAX_N = 62


def to_graph6(g: Graph) -> str:
    if g.n > _G6_MAX_N:
        raise Graph6Error(f"graph6 single-byte header supports n <= {_G6_MAX_N}, got {g.n}")
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c < 64 for c in codes):
        raise Graph6Error("graph6 characters must lie in the range '?'..'~'")
    n = codes[0]
    if n == 63:
        raise Graph6Error("multi-byte graph6 headers (n > 62) are not supported")
    nbits = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return build_graph(int(data["n"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed edge-list JSON: {exc}") from exc


# -- predicates ----------------------------------------------------------------

def _reach(g: Graph, start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    return _reach(g, 0, g.vertex_mask) == g.vertex_mask


def _connected_without(g: Graph, removed: int) -> bool:
    rest = g.vertex_mask & ~removed
    if not rest:
        return False
    start = (rest & -rest).bit_length() - 1
    return _reach(g, start, rest) == rest


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True when deleting any fewer than ``k`` vertices leaves ``g`` connected."""
    if k not in (1, 2, 3, 4):
        raise GraphError("k must be 1, 2, 3 or 4")
    if g.n <= k:
        raise GraphError(f"need more than {k} vertices, got {g.n}")
    for size in range(k):
        for cut in combinations(range(g.n), size):
            removed = 0
            for v in cut:
                removed |= 1 << v
            if not _connected_without(g, removed):
                return False
    return True


def _has_independent(g: Graph, candidates: int, r: int) -> bool:
    if r == 0:
        return True
    if popcount(candidates) < r:
        return False
    for v in iter_bits(candidates):
        candidates &= ~(1 << v)
        if _has_independent(g, candidates & ~g.adj[v], r - 1):
            return True
        if popcount(candidates) < r:
            return False
    return False


def is_k1r_free(g: Graph, r: int) -> bool:
    """No vertex has ``r`` pairwise nonadjacent neighbours."""
    if r < 3:
        raise GraphError("r must be at least 3")
    return not any(_has_independent(g, row, r) for row in g.adj)


def is_independent(g: Graph, mask: int) -> bool:
    return all(not (g.adj[v] & mask) for v in iter_bits(mask))


def is_clique(g: Graph, mask: int) -> bool:
    return all((g.adj[v] | 1 << v) & mask == mask for v in iter_bits(mask))


# -- split graphs --------------------------------------------------------------

@dataclass(frozen=True)
class SplitWitness:
    clique: frozenset[int]
    independent: frozenset[int]

    @property
    def sizes(self) -> tuple[int, int]:
        return len(self.clique), len(self.independent)


def clique_number(g: Graph) -> int:
    """Exact maximum clique size by branch and bound."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            v = max(iter_bits(cand), key=lambda w: popcount(g.adj[w] & cand))
            cand &= ~(1 << v)
            expand(size + 1, cand & g.adj[v])

    expand(0, g.vertex_mask)
    return best


def split_witness(g: Graph) -> SplitWitness | None:
    """Split partition with K a maximum clique, or None when ``g`` is not split.

    The degree-sequence test picks the candidate clique; among all maximum
    cliques with an independent complement, the lexicographically least one
    is returned.
    """
    if g.n == 0:
        return SplitWitness(frozenset(), frozenset())
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-deg[v], v))
    d = [deg[v] for v in order]
    m = max(i + 1 for i in range(g.n) if d[i] >= i)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    base = 0
    for v in order[:m]:
        base |= 1 << v
    if not (is_clique(g, base) and is_independent(g, g.vertex_mask & ~base)):
        raise AssertionError("degree-sequence split test produced an invalid partition")
    if clique_number(g) != m:
        raise AssertionError("split clique is not maximum")

    candidates = [base]
    for u in iter_bits(g.vertex_mask & ~base):
        missing = base & ~g.adj[u]
        if popcount(missing) == 1:
            k = (base & ~missing) | 1 << u
            if is_independent(g, g.vertex_mask & ~k):
                candidates.append(k)
    best = min(candidates, key=lambda mask: list(iter_bits(mask)))
    return SplitWitness(frozenset(iter_bits(best)), frozenset(iter_bits(g.vertex_mask & ~best)))
