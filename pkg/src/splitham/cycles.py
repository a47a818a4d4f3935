"""Exact Hamiltonicity and full cycle extendability by subset dynamic programming."""
from __future__ import annotations

from array import array

from .graph import Graph, GraphError, SizeBoundError, iter_bits

HAMILTON_MAX_N = 24
EXTENDABLE_MAX_N = 10


def is_hamiltonian(g: Graph) -> bool:
    """Held-Karp style reachability anchored at vertex 0.

    ``ends[s]`` is the bitset of vertices at which a path starting at 0 and
    covering exactly ``{0} | s`` can stop (``s`` is stored shifted down by one
    bit since vertex 0 is always on the path).
    """
    n = g.n
    if n == 0:
        raise GraphError("Hamiltonicity is undefined for the empty graph")
    if n > HAMILTON_MAX_N:
        raise SizeBoundError(f"Hamiltonicity DP is limited to n <= {HAMILTON_MAX_N}, got {n}")
    if n < 3 or min(g.degrees()) < 2:
        return False
    adj = g.adj
    m = n - 1
    full = (1 << m) - 1
    ends = array("I", bytes(4 << m))
    ends[0] = 1
    for sub in range(1 << m):
        e = ends[sub]
        if not e:
            continue
        rest = full & ~sub
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length()
            if adj[w] & e:
                ends[sub | low] |= 1 << w
    return bool(ends[full] & adj[0])


def cyclable_sets(g: Graph) -> bytearray:
    """Flag table over vertex subsets: ``table[S]`` is 1 iff ``G[S]`` has a spanning cycle.

    For each start vertex ``s`` the DP walks paths that begin at ``s`` and use
    only larger vertices, so every cycle is counted from its least vertex.
    """
    n = g.n
    adj = g.adj
    table = bytearray(1 << n)
    for s in range(n):
        m = n - s - 1
        if m < 2:
            break
        shift = s + 1
        sbit = 1 << s
        ends = array("I", bytes(4 << m))
        ends[0] = sbit
        full = (1 << m) - 1
        closing = adj[s]
        for sub in range(1 << m):
            e = ends[sub]
            if not e:
                continue
            if e & closing and sub & (sub - 1):
                table[sub << shift | sbit] = 1
            rest = full & ~sub
            while rest:
                low = rest & -rest
                rest ^= low
                if adj[low.bit_length() - 1 + shift] & e:
                    ends[sub | low] |= low << shift
    return table


def is_fully_cycle_extendable(g: Graph) -> bool:
    """Every vertex is on a triangle and every non-spanning cycle grows by one vertex.

    Whether a cycle ``C`` extends depends only on ``V(C)``, so the check runs
    over vertex sets that carry a cycle.
    """
    n = g.n
    if n == 0:
        raise GraphError("cycle extendability is undefined for the empty graph")
    if n > EXTENDABLE_MAX_N:
        raise SizeBoundError(f"cycle extendability is limited to n <= {EXTENDABLE_MAX_N}, got {n}")
    adj = g.adj
    for v in range(n):
        if not any(adj[v] & adj[w] for w in iter_bits(adj[v])):
            return False
    table = cyclable_sets(g)
    full = (1 << n) - 1
    for mask in range(full):
        if not table[mask]:
            continue
        rest = full & ~mask
        while rest:
            low = rest & -rest
            if table[mask | low]:
                break
            rest ^= low
        else:
            return False
    return True
