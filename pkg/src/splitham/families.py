"""Constructors for the extremal split-graph families and their equitable partitions.

Vertex order is fixed: clique vertices ``v_1..v_k`` take indices ``0..k-1`` and
independent vertices ``u_1..u_t`` take ``k..n-1``.  Neighbourhoods below are
written with 1-based clique labels, as in the drawings they come from.
"""
from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from .equitable import Partition, coarsest_equitable, degree_partition
from .graph import Graph, GraphError, build_graph


class FamilyError(GraphError):
    """Unknown family or parameters outside its legal range."""


class FamilyId(enum.Enum):
    G_nt = "G_nt"
    Gamma_nt = "Gamma_nt"
    GammaP_n2 = "GammaP_n2"
    GammaP_n3 = "GammaP_n3"
    GammaPP_n2 = "GammaPP_n2"
    GammaPP_n3 = "GammaPP_n3"
    GammaP_n4 = "GammaP_n4"
    GammaP_n5 = "GammaP_n5"
    GammaPP_n5 = "GammaPP_n5"
    GammaStar = "GammaStar"
    GammaStarStar = "GammaStarStar"
    S1p1q = "S1p1q"
    CompleteSplit = "CompleteSplit"


# ids whose independent-set size is fixed by the id itself
_FIXED_T = {
    FamilyId.GammaP_n2: 2,
    FamilyId.GammaP_n3: 3,
    FamilyId.GammaPP_n2: 2,
    FamilyId.GammaPP_n3: 3,
    FamilyId.GammaP_n4: 4,
    FamilyId.GammaP_n5: 5,
    FamilyId.GammaPP_n5: 5,
}
_MIN_N = {
    FamilyId.GammaP_n2: 5,
    FamilyId.GammaP_n3: 6,
    FamilyId.GammaPP_n2: 5,
    FamilyId.GammaPP_n3: 6,
    FamilyId.GammaP_n4: 8,
    FamilyId.GammaP_n5: 10,
    FamilyId.GammaPP_n5: 10,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its integer parameters.

    ``params`` is ``(n, t)`` for every G/Gamma family (``t`` is ``|I|``),
    ``(p, q)`` for ``S1p1q`` and ``(k, i)`` for ``CompleteSplit``.
    """

    id: FamilyId
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate(self)

    @property
    def n(self) -> int:
        if self.id is FamilyId.S1p1q:
            return self.params[0] + self.params[1] + 2
        return self.params[0] + self.params[1] if self.id is FamilyId.CompleteSplit else self.params[0]

    @property
    def i_size(self) -> int:
        if self.id is FamilyId.S1p1q:
            return self.params[1] + 1
        return self.params[1]

    @property
    def k_size(self) -> int:
        return self.n - self.i_size

    @property
    def label(self) -> str:
        return f"{self.id.value}({', '.join(map(str, self.params))})"


def _validate(spec: FamilySpec) -> None:
    if not isinstance(spec.id, FamilyId):
        raise FamilyError(f"unknown family {spec.id!r}")
    if len(spec.params) != 2 or not all(isinstance(x, int) for x in spec.params):
        raise FamilyError(f"{spec.id.value} takes two integer parameters, got {spec.params}")
    a, b = spec.params
    fid = spec.id
    if fid is FamilyId.G_nt:
        ok = a >= 4 and 1 <= b and 2 * b <= a
    elif fid is FamilyId.Gamma_nt:
        ok = a >= 5 and 1 <= b and 2 * b <= a
    elif fid in _FIXED_T:
        ok = b == _FIXED_T[fid] and a >= _MIN_N[fid]
    elif fid in (FamilyId.GammaStar, FamilyId.GammaStarStar):
        ok = b >= 6 and a >= 2 * b
    elif fid is FamilyId.S1p1q:
        ok = a >= 1 and b >= 1
    else:
        ok = a >= 1 and b >= 0
    if not ok:
        raise FamilyError(f"parameters {spec.params} are outside the legal range of {fid.value}")


def _split(k: int, nbhds: Sequence[Sequence[int]]) -> Graph:
    """Clique on ``v_1..v_k`` plus one independent vertex per neighbourhood (1-based labels)."""
    edges = list(combinations(range(k), 2))
    for j, nb in enumerate(nbhds):
        for v in nb:
            if not 1 <= v <= k:
                raise AssertionError(f"clique label v_{v} outside 1..{k}")
            edges.append((v - 1, k + j))
    return build_graph(k + len(nbhds), edges)


def _r(a: int, b: int) -> list[int]:
    return list(range(a, b + 1))


def _g_nt(n: int, t: int) -> Graph:
    nb = [[i] for i in range(1, max(t - 1, 1) + 1)]
    if t >= 2:
        nb.append(_r(t, n - t))
    return _split(n - t, nb)


def _gamma_nt(n: int, t: int) -> Graph:
    k = n - t
    if t == 1:
        return _g_nt(n, 1)
    if t == 2:
        return _split(k, [_r(1, n - 3), [n - 3]])
    if t == 3:
        return _split(k, [_r(1, n - 4), _r(1, n - 4), [n - 3]])
    if t == 4:
        return _split(k, [_r(1, n - 5), _r(1, n - 5), _r(2, n - 4), [n - 4]])
    if t == 5:
        return _split(k, [[1, k], _r(1, n - 6), _r(1, n - 6), _r(2, k), [k]])
    nb = [[i] for i in range(1, t - 4)]
    nb += [
        _r(1, n - t - 1),
        _r(1, n - t - 2) + [n - t],
        _r(t - 4, n - t),
        [n - t - 1],
        [n - t],
    ]
    return _split(k, nb)


def _abcde(k: int) -> tuple[int, list[int], int, int]:
    # shared labelling of the t=4 and t=5 variants: a, middle block, d, e
    return 1, _r(2, k - 2), k - 1, k


def _gamma_p_n4(n: int) -> Graph:
    a, m, d, e = _abcde(n - 4)
    return _split(n - 4, [[a], [a, *m, d], [a, *m, e], [*m, d, e]])


def _gamma_p_n5(n: int) -> Graph:
    a, m, d, e = _abcde(n - 5)
    return _split(n - 5, [[a], [a, *m, d], [a, *m, e], [*m, d, e], [d]])


def _gamma_pp_n5(n: int) -> Graph:
    a, m, d, e = _abcde(n - 5)
    return _split(n - 5, [[a, d], [a, *m, d], [a, *m, e], [*m, d, e], [e]])


def _gamma_pp_n3(n: int) -> Graph:
    rest = _r(4, n - 3)
    return _split(n - 3, [rest + [1, 2], rest + [3, 2], [2]])


def _star_blocks(n: int, i: int) -> tuple[int, int]:
    a = i - 5
    return a, n - 2 * a - 6


def _gamma_star(n: int, i: int) -> Graph:
    a, b = _star_blocks(n, i)
    v1 = _r(1, a)
    v2 = _r(a + 1, a + b)
    v3 = a + b + 1
    nb = [[v] for v in v1]
    nb += [v1 + [v3], v1 + v2, v2 + [v3], v2, [v3]]
    return _split(a + b + 1, nb)


def _gamma_star_star(n: int, i: int) -> Graph:
    a, b = _star_blocks(n, i)
    v1 = _r(1, a - 1)
    v2 = _r(a, a + b - 1)
    s, t = a + b, a + b + 1
    nb = [[v] for v in v1]
    nb += [v1 + v2 + [s], v1 + v2 + [t], v2, [s, t], [s], [t]]
    return _split(a + b + 1, nb)


def _s1p1q(p: int, q: int) -> Graph:
    k = p + 1
    return _split(k, [[1]] + [_r(1, k)] * q)


def _complete_split(k: int, i: int) -> Graph:
    return _split(k, [_r(1, k)] * i)


def build_family(spec: FamilySpec) -> Graph:
    a, b = spec.params
    fid = spec.id
    if fid is FamilyId.G_nt:
        return _g_nt(a, b)
    if fid is FamilyId.Gamma_nt:
        return _gamma_nt(a, b)
    if fid is FamilyId.GammaP_n2:
        return _split(a - 2, [[1, 2], [1, 2]])
    if fid is FamilyId.GammaP_n3:
        return _split(a - 3, [[1, 2], [1, 2], _r(2, a - 3)])
    if fid is FamilyId.GammaPP_n2:
        return _split(a - 2, [_r(1, a - 3), [a - 2]])
    if fid is FamilyId.GammaPP_n3:
        return _gamma_pp_n3(a)
    if fid is FamilyId.GammaP_n4:
        return _gamma_p_n4(a)
    if fid is FamilyId.GammaP_n5:
        return _gamma_p_n5(a)
    if fid is FamilyId.GammaPP_n5:
        return _gamma_pp_n5(a)
    if fid is FamilyId.GammaStar:
        return _gamma_star(a, b)
    if fid is FamilyId.GammaStarStar:
        return _gamma_star_star(a, b)
    if fid is FamilyId.S1p1q:
        return _s1p1q(a, b)
    return _complete_split(a, b)


def family(name: str, *params: int) -> FamilySpec:
    """Resolve a short family name (``G``, ``Gamma``, ``GammaP``, ``GammaPP``, ``GammaStar``,
    ``GammaStarStar``, ``S``, ``CompleteSplit``) and its parameters."""
    params = tuple(int(p) for p in params)
    if len(params) != 2:
        raise FamilyError(f"family {name!r} takes two parameters, got {len(params)}")
    simple = {
        "G": FamilyId.G_nt,
        "Gamma": FamilyId.Gamma_nt,
        "GammaStar": FamilyId.GammaStar,
        "GammaStarStar": FamilyId.GammaStarStar,
        "S": FamilyId.S1p1q,
        "CompleteSplit": FamilyId.CompleteSplit,
    }
    if name in simple:
        return FamilySpec(simple[name], params)
    if name in ("GammaP", "GammaPP"):
        fid = {
            ("GammaP", 2): FamilyId.GammaP_n2,
            ("GammaP", 3): FamilyId.GammaP_n3,
            ("GammaP", 4): FamilyId.GammaP_n4,
            ("GammaP", 5): FamilyId.GammaP_n5,
            ("GammaPP", 2): FamilyId.GammaPP_n2,
            ("GammaPP", 3): FamilyId.GammaPP_n3,
            ("GammaPP", 5): FamilyId.GammaPP_n5,
        }.get((name, params[1]))
        if fid is None:
            raise FamilyError(f"{name} is not defined for |I| = {params[1]}")
        return FamilySpec(fid, params)
    try:
        return FamilySpec(FamilyId(name), params)
    except ValueError:
        raise FamilyError(f"unknown family name {name!r}") from None


FAMILY_NAMES = ("G", "Gamma", "GammaP", "GammaPP", "GammaStar", "GammaStarStar", "S", "CompleteSplit")


def vertex_labels(spec: FamilySpec) -> list[str]:
    k = spec.k_size
    return [f"v{j}" for j in range(1, k + 1)] + [f"u{j}" for j in range(1, spec.n - k + 1)]


def extra_edge_p5(n: int) -> tuple[int, int]:
    """The non-edge ``u'v'`` of the t=5 primed graph whose addition yields the double-primed one."""
    k = n - 5
    return n - 1, k - 1


# -- equitable partitions --------------------------------------------------------

def _cells(k: int, clique: Sequence[Sequence[int]], indep: Sequence[Sequence[int]]) -> Partition:
    # 1-based labels on each side
    return Partition.of([[v - 1 for v in c] for c in clique] + [[k + u - 1 for u in c] for c in indep])


def family_partition(spec: FamilySpec) -> Partition:
    """Equitable partition with cells ordered by minimum vertex.

    The six families with published quotient matrices get hand-written cells;
    everything else gets the coarsest equitable refinement of its degree classes.
    """
    n, t = spec.params
    fid = spec.id
    if fid is FamilyId.Gamma_nt and t == 3:
        k = n - 3
        part = _cells(k, [_r(1, k - 1), [k]], [[1, 2], [3]])
    elif fid is FamilyId.GammaP_n3:
        k = n - 3
        part = _cells(k, [[1], [2], _r(3, k)], [[1, 2], [3]])
    elif fid is FamilyId.Gamma_nt and t == 4:
        k = n - 4
        part = _cells(k, [[1], _r(2, k - 1), [k]], [[1, 2], [3], [4]])
    elif fid is FamilyId.GammaP_n4:
        k = n - 4
        a, m, d, e = _abcde(k)
        part = _cells(k, [[a], m, [d, e]], [[1], [2, 3], [4]])
    elif fid is FamilyId.Gamma_nt and t == 5:
        k = n - 5
        part = _cells(k, [[1], _r(2, k - 1), [k]], [[1], [2, 3], [4], [5]])
    elif fid is FamilyId.GammaPP_n5:
        k = n - 5
        a, m, d, e = _abcde(k)
        part = _cells(k, [[a, d], m, [e]], [[1], [2], [3, 4], [5]])
    else:
        g = build_family(spec)
        return coarsest_equitable(g, degree_partition(g))
    return Partition(tuple(sorted(part.cells, key=min)))


# published quotient matrices, keyed by (family, |I|): the cell order taking
# min-index cells to the printed order, and the matrix as a function of n
PAPER_QUOTIENTS = {
    (FamilyId.Gamma_nt, 3): (
        (0, 1, 2, 3),
        lambda n: (
            (n - 5, 1, 2, 0),
            (n - 4, 0, 0, 1),
            (n - 4, 0, 0, 0),
            (0, 1, 0, 0),
        ),
    ),
    (FamilyId.GammaP_n3, 3): (
        (2, 1, 0, 3, 4),
        lambda n: (
            (n - 6, 1, 1, 0, 1),
            (n - 5, 0, 1, 2, 1),
            (n - 5, 1, 0, 2, 0),
            (0, 1, 1, 0, 0),
            (n - 5, 1, 0, 0, 0),
        ),
    ),
    (FamilyId.Gamma_nt, 4): (
        (0, 1, 2, 3, 4, 5),
        lambda n: (
            (0, n - 6, 1, 2, 0, 0),
            (1, n - 7, 1, 2, 1, 0),
            (1, n - 6, 0, 0, 1, 1),
            (1, n - 6, 0, 0, 0, 0),
            (0, n - 6, 1, 0, 0, 0),
            (0, 0, 1, 0, 0, 0),
        ),
    ),
    (FamilyId.GammaP_n4, 4): (
        (0, 1, 2, 3, 4, 5),
        lambda n: (
            (0, n - 7, 2, 1, 2, 0),
            (1, n - 8, 2, 0, 2, 1),
            (1, n - 7, 1, 0, 1, 1),
            (1, 0, 0, 0, 0, 0),
            (1, n - 7, 1, 0, 0, 0),
            (0, n - 7, 2, 0, 0, 0),
        ),
    ),
}


def paper_quotient(spec: FamilySpec) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]] | None:
    """Published quotient matrix for ``spec`` and the cell order that reproduces it, if one is printed."""
    entry = PAPER_QUOTIENTS.get((spec.id, spec.i_size))
    if entry is None:
        return None
    order, matrix = entry
    return order, matrix(spec.params[0])
