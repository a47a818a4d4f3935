"""Split graphs, spectral radii and Hamiltonicity: constructors, solvers and exhaustive checks."""
from __future__ import annotations

from .graph import Graph, GraphError, SizeBoundError, SplitWitness, build_graph, from_graph6, to_graph6

__all__ = [
    "Graph",
    "GraphError",
    "SizeBoundError",
    "SplitWitness",
    "build_graph",
    "from_graph6",
    "to_graph6",
]
__version__ = "0.1.0"
