"""Canonical forms by individualisation-refinement, and isomorphism tests built on them."""
from __future__ import annotations

from .graph import Graph, SizeBoundError, popcount

CANON_MAX_N = 16


def refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Each non-singleton cell is split by neighbour counts into every cell, with
    the pieces kept in place and sorted by count.  The procedure only looks at
    the ordered partition, so relabelling commutes with it.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            wmask = 0
            for v in cells[w]:
                wmask |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(popcount(g.adj[v] & wmask), []).append(v)
                if len(groups) > 1:
                    changed = True
                    out.extend(groups[k] for k in sorted(groups))
                else:
                    out.append(cell)
            cells = out
            if changed:
                break
    return cells


def _code(g: Graph, order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for w, i in pos.items():
            if g.adj[v] >> w & 1:
                row |= 1 << i
        rows.append(row)
    return tuple(rows)


class _Search:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.first: tuple[tuple[int, ...], list[int], list[int]] | None = None
        self.best: tuple[tuple[int, ...], list[int], list[int]] | None = None
        self.automorphisms: list[dict[int, int]] = []

    def run(self) -> None:
        if self.g.n:
            self._visit(refine(self.g, [list(range(self.g.n))]), [])

    def _orbits(self, fixed: list[int]) -> dict[int, int]:
        # orbits of the group generated by stored automorphisms that fix ``fixed`` pointwise
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if all(gamma[f] == f for f in fixed):
                for a, b in gamma.items():
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        return {v: find(v) for v in range(self.g.n)}

    def _visit(self, cells: list[list[int]], path: list[int]) -> int | None:
        """Explore a node; returns a tree level to jump back to, if any."""
        if all(len(c) == 1 for c in cells):
            return self._leaf([c[0] for c in cells], path)
        target = min((c for c in cells if len(c) > 1), key=len)
        idx = cells.index(target)
        explored: list[int] = []
        for v in target:
            if explored and self.automorphisms:
                orbit = self._orbits(path)
                if any(orbit[v] == orbit[w] for w in explored):
                    continue
            explored.append(v)
            child = cells[:idx] + [[v], [w for w in target if w != v]] + cells[idx + 1:]
            jump = self._visit(refine(self.g, child), path + [v])
            if jump is not None and jump < len(path):
                return jump
        return None

    def _leaf(self, order: list[int], path: list[int]) -> int | None:
        code = _code(self.g, order)
        if self.first is None:
            self.first = self.best = (code, order, list(path))
            return None
        for ref_code, ref_order, ref_path in (self.first, self.best):
            if code == ref_code:
                self.automorphisms.append(dict(zip(ref_order, order)))
                level = 0
                while level < len(path) and path[level] == ref_path[level]:
                    level += 1
                return level
        if code < self.best[0]:
            self.best = (code, order, list(path))
        return None


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order whose relabelled adjacency is the canonical form."""
    if g.n > CANON_MAX_N:
        raise SizeBoundError(f"canonical labelling is limited to n <= {CANON_MAX_N}, got {g.n}")
    search = _Search(g)
    search.run()
    return search.best[1] if search.best else []


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    order = canonical_labeling(g)
    return g.n, _code(g, order)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n > CANON_MAX_N or h.n > CANON_MAX_N:
        raise SizeBoundError(f"isomorphism testing is limited to n <= {CANON_MAX_N}")
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
