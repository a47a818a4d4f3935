"""Equitable partitions, integer quotient matrices and exact characteristic polynomials."""
from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, GraphError, popcount

CHARPOLY_MAX_S = 12


class PartitionError(GraphError):
    """Cells overlap, are empty, miss a vertex, or the partition is not equitable."""


@dataclass(frozen=True)
class Partition:
    cells: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, cells: Iterable[Iterable[int]]) -> Partition:
        return cls(tuple(tuple(sorted(c)) for c in cells))

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def permuted(self, order: Sequence[int]) -> Partition:
        """Cells rearranged so that new cell ``i`` is old cell ``order[i]``."""
        if sorted(order) != list(range(len(self.cells))):
            raise PartitionError("cell order must be a permutation of the cell indices")
        return Partition(tuple(self.cells[i] for i in order))

    def masks(self) -> list[int]:
        out = []
        for cell in self.cells:
            m = 0
            for v in cell:
                m |= 1 << v
            out.append(m)
        return out


def _check_cover(g: Graph, p: Partition) -> list[int]:
    masks = p.masks()
    seen = 0
    for cell, m in zip(p.cells, masks):
        if not cell:
            raise PartitionError("empty cell")
        if len(set(cell)) != len(cell) or seen & m:
            raise PartitionError("cells overlap")
        seen |= m
    if seen != g.vertex_mask:
        raise PartitionError("cells must cover exactly the vertices 0..n-1")
    return masks


def is_equitable(g: Graph, p: Partition) -> bool:
    masks = _check_cover(g, p)
    for cell in p.cells:
        for m in masks:
            counts = {popcount(g.adj[v] & m) for v in cell}
            if len(counts) > 1:
                return False
    return True


def degree_partition(g: Graph) -> Partition:
    groups: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees()):
        groups.setdefault(d, []).append(v)
    return Partition.of(groups[d] for d in sorted(groups))


def coarsest_equitable(g: Graph, seed: Partition | None = None) -> Partition:
    """Coarsest equitable refinement of ``seed`` (default: one cell), cells ordered by minimum vertex."""
    if seed is None:
        seed = Partition.of([range(g.n)]) if g.n else Partition(())
    _check_cover(g, seed)
    colour = [0] * g.n
    for i, cell in enumerate(seed.cells):
        for v in cell:
            colour[v] = i
    ncolours = len(seed.cells)
    while True:
        signature = []
        for v in range(g.n):
            row = [0] * ncolours
            w_mask = g.adj[v]
            while w_mask:
                low = w_mask & -w_mask
                row[colour[low.bit_length() - 1]] += 1
                w_mask ^= low
            signature.append((colour[v], tuple(row)))
        palette = {s: i for i, s in enumerate(sorted(set(signature)))}
        if len(palette) == ncolours:
            break
        colour = [palette[s] for s in signature]
        ncolours = len(palette)
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return Partition(tuple(sorted((tuple(c) for c in cells.values()), key=min)))


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(self.s, self.s)

    def permuted(self, order: Sequence[int]) -> QuotientMatrix:
        return QuotientMatrix(
            tuple(tuple(self.entries[i][j] for j in order) for i in order),
            tuple(self.sizes[i] for i in order),
        )


def quotient(g: Graph, p: Partition) -> QuotientMatrix:
    masks = _check_cover(g, p)
    rows = []
    for cell in p.cells:
        row = []
        for m in masks:
            counts = {popcount(g.adj[v] & m) for v in cell}
            if len(counts) != 1:
                raise PartitionError("partition is not equitable")
            row.append(counts.pop())
        rows.append(tuple(row))
    return QuotientMatrix(tuple(rows), tuple(p.sizes))


# -- polynomials (integer coefficients, highest degree first) ------------------

def char_poly(q: QuotientMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Monic characteristic polynomial by Faddeev-LeVerrier in exact integers."""
    a = [list(r) for r in (q.entries if isinstance(q, QuotientMatrix) else q)]
    s = len(a)
    if any(len(r) != s for r in a):
        raise ValueError("matrix must be square")
    if s > CHARPOLY_MAX_S:
        raise ValueError(f"characteristic polynomials are limited to s <= {CHARPOLY_MAX_S}, got {s}")
    coeffs = [1]
    m = [[0] * s for _ in range(s)]
    for k in range(1, s + 1):
        # M_k = A M_{k-1} + c_{k-1} I, then c_k = -tr(A M_k) / k
        prev = coeffs[-1]
        m = [
            [sum(a[i][l] * m[l][j] for l in range(s)) + (prev if i == j else 0) for j in range(s)]
            for i in range(s)
        ]
        trace = sum(a[i][l] * m[l][i] for i in range(s) for l in range(s))
        if trace % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step; entries must be integers")
        coeffs.append(-trace // k)
    return coeffs


def poly_eval(coeffs: Sequence[int | Fraction], x: int | Fraction) -> int | Fraction:
    acc: int | Fraction = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_sub(p: Sequence[int], q: Sequence[int]) -> list[int]:
    width = max(len(p), len(q))
    p = [0] * (width - len(p)) + list(p)
    q = [0] * (width - len(q)) + list(q)
    out = [a - b for a, b in zip(p, q)]
    while len(out) > 1 and out[0] == 0:
        out.pop(0)
    return out


def poly_mul_x(p: Sequence[int]) -> list[int]:
    return list(p) + [0]


def _poly_divmod(p: list[Fraction], q: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    p = list(p)
    quot = []
    while len(p) >= len(q):
        factor = p[0] / q[0]
        quot.append(factor)
        for i in range(len(q)):
            p[i] -= factor * q[i]
        p.pop(0)
    while p and p[0] == 0:
        p.pop(0)
    return quot, p


def _sturm_chain(coeffs: Sequence[int]) -> list[list[Fraction]]:
    def build(p: list[Fraction]) -> list[list[Fraction]]:
        deg = len(p) - 1
        chain = [p, [c * (deg - i) for i, c in enumerate(p[:-1])]]
        while len(chain[-1]) > 1:
            _, r = _poly_divmod(chain[-2], chain[-1])
            if not r:
                break
            chain.append([-c for c in r])
        return chain

    p = [Fraction(c) for c in coeffs]
    chain = build(p)
    if len(chain[-1]) > 1:
        # repeated roots: the chain ends in gcd(p, p'); restart from the square-free part
        p, _ = _poly_divmod(p, chain[-1])
        chain = build(p)
    return chain


def _sign_changes(values: Iterable[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def largest_root(coeffs: Sequence[int], width: Fraction = Fraction(1, 2**60)) -> tuple[Fraction, Fraction]:
    """Bracket ``(lo, hi]`` of width at most ``width`` around the largest real root.

    Sturm sequences give exact root counts above any rational point, so the
    bracket is rigorous.
    """
    if len(coeffs) < 2 or coeffs[0] == 0:
        raise ValueError("need a polynomial of degree at least 1 with nonzero leading coefficient")
    chain = _sturm_chain(coeffs)
    at_infinity = _sign_changes(c[0] for c in chain)

    def roots_above(x: Fraction) -> int:
        return _sign_changes(poly_eval(c, x) for c in chain) - at_infinity

    bound = 1 + max(abs(Fraction(c, coeffs[0])) for c in coeffs[1:])
    lo, hi = -bound, bound
    if roots_above(lo) == 0:
        raise ValueError("polynomial has no real roots")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if roots_above(mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def largest_root_float(coeffs: Sequence[int]) -> float:
    lo, hi = largest_root(coeffs)
    return float((lo + hi) / 2)


class PaperPoly(enum.Enum):
    I3_f = "I3_f"
    I3_g = "I3_g"
    I3_tau = "I3_tau"
    I44_f = "I44_f"
    I44_g = "I44_g"
    I44_h = "I44_h"
    I5_f = "I5_f"
    I5_g = "I5_g"
    I5_h = "I5_h"


_PAPER_POLYS = {
    PaperPoly.I3_f: lambda n: [1, -(n - 5), -(3 * n - 11), n - 5, 2 * n - 8],
    PaperPoly.I3_g: lambda n: [1, -(n - 6), -(3 * n - 9), 2 * n - 20, 8 * n - 42, 2 * n - 8],
    PaperPoly.I3_tau: lambda n: [1, -2, n - 15, 6 * n - 34, 2 * n - 8],
    PaperPoly.I44_f: lambda n: [1, -(n - 7), -5 * (n - 5), -(3 * n - 13), 4 * (2 * n - 11), 4 * (n - 5), -2 * n + 12],
    PaperPoly.I44_g: lambda n: [1, -(n - 7), -(5 * n - 26), -(4 * n - 19), 6 * n - 36, 4 * n - 21, -n + 7],
    PaperPoly.I44_h: lambda n: [1, -(n - 6), -2 * (n - 4), -1, n - 5],
    PaperPoly.I5_f: lambda n: [1, -(n - 8), -(5 * n - 28), -(n + 2), 16 * n - 106, 6 * n - 34, -13 * n + 91],
    PaperPoly.I5_g: lambda n: [1, -(n - 8), -(5 * n - 29), -(2 * n - 5), 14 * n - 100, 6 * n - 35, -11 * n + 88],
    PaperPoly.I5_h: lambda n: [1, -(n - 7), -(2 * n - 6), -1, 2 * n - 3],
}


def paper_poly(pid: PaperPoly | str, n: int) -> list[int]:
    """Coefficients (highest degree first) of a published closed-form polynomial at order ``n``."""
    try:
        key = pid if isinstance(pid, PaperPoly) else PaperPoly(pid)
    except ValueError:
        raise ValueError(f"unknown polynomial id {pid!r}; expected one of {[p.value for p in PaperPoly]}") from None
    return _PAPER_POLYS[key](n)
