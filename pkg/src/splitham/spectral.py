"""Spectral radius and Perron vector of connected graphs, plus margin-aware comparisons."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, is_connected

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10**6
DEFAULT_MARGIN = 1e-6

# power steps between attempts at the Rayleigh-quotient polish
_POLISH_EVERY = 25
_POLISH_STEPS = 6


class ConvergenceError(RuntimeError):
    """The eigensolver hit ``max_iter`` before the residual fell below ``tol``."""


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    vector: np.ndarray
    residual: float
    iterations: int

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "vector": [float(x) for x in self.vector],
            "residual": self.residual,
            "iterations": self.iterations,
        }


def _residual(a: np.ndarray, x: np.ndarray) -> tuple[float, float]:
    ax = a @ x
    rho = float(x @ ax)
    return rho, float(np.max(np.abs(ax - rho * x)))


def _polish(a: np.ndarray, x: np.ndarray, tol: float) -> tuple[np.ndarray, int] | None:
    """Rayleigh-quotient iteration from ``x``; keeps the answer only if it stays positive.

    A positive eigenvector of an irreducible nonnegative matrix is the Perron
    vector, so positivity certifies that the polish did not jump to another
    eigenpair.
    """
    n = len(x)
    eye = np.eye(n)
    for step in range(1, _POLISH_STEPS + 1):
        sigma = float(x @ (a @ x))
        try:
            y = np.linalg.solve(a - sigma * eye, x)
        except np.linalg.LinAlgError:
            # shift hit the eigenvalue to machine precision: x is already converged
            y = x.copy()
        norm = np.linalg.norm(y)
        if not np.isfinite(norm) or norm == 0:
            return None
        y /= norm
        if y.sum() < 0:
            y = -y
        x = y
        _, res = _residual(a, x)
        if res <= tol:
            return (x, step) if np.all(x > 0) else None
    return None


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    """Perron root and unit Perron vector of a connected graph.

    Power iteration on ``A + I`` from the all-ones vector (the shift keeps the
    dominant eigenvalue unique in modulus, also for bipartite graphs), with a
    periodic Rayleigh-quotient polish once the iterate is close.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    if g.n == 0:
        raise GraphError("spectral radius is undefined for the empty graph")
    if not is_connected(g):
        raise GraphError("graph must be connected for a unique Perron vector")
    if g.n == 1:
        return SpectralResult(0.0, np.ones(1), 0.0, 0)

    a = g.adjacency_matrix()
    x = np.full(g.n, 1.0 / np.sqrt(g.n))
    for it in range(1, max_iter + 1):
        y = a @ x + x
        x = y / np.linalg.norm(y)
        rho, res = _residual(a, x)
        if res <= tol:
            return SpectralResult(rho, x, res, it)
        if it % _POLISH_EVERY == 0 and res < 1e-2:
            polished = _polish(a, x, tol)
            if polished is not None:
                x, extra = polished
                rho, res = _residual(a, x)
                return SpectralResult(rho, x, res, it + extra)
    raise ConvergenceError(f"no convergence to tol={tol} within {max_iter} iterations (residual {res:.3e})")


class Ordering(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    INDISTINGUISHABLE = "indistinguishable"


@dataclass(frozen=True)
class Comparison:
    ordering: Ordering
    left: SpectralResult
    right: SpectralResult
    margin: float

    @property
    def gap(self) -> float:
        return self.left.rho - self.right.rho


def order_values(a: float, b: float, margin: float) -> Ordering:
    if a - b > margin:
        return Ordering.GREATER
    if b - a > margin:
        return Ordering.LESS
    return Ordering.INDISTINGUISHABLE


def check_margin(margin: float, tol: float) -> None:
    if margin < 10 * tol:
        raise ValueError(f"margin {margin:g} must be at least 10x the solver tolerance {tol:g}")


def compare_rho(
    g: Graph,
    h: Graph,
    margin: float = DEFAULT_MARGIN,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Comparison:
    """Order two spectral radii, refusing to decide gaps within ``margin``."""
    check_margin(margin, tol)
    left = spectral_radius(g, tol, max_iter)
    right = spectral_radius(h, tol, max_iter)
    return Comparison(order_values(left.rho, right.rho, margin), left, right, margin)
