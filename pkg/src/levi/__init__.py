"""Levi graphs of symmetric n3 configurations and their 2-factors."""

from levi.canon import are_isomorphic, canonical_form
from levi.cuts import edge_connectivity, essential_4ec
from levi.graph import Bipartition, CircuitDecomposition, EdgeCut, Graph, Path, bipartition, decompose, girth

__all__ = [
    "Bipartition",
    "CircuitDecomposition",
    "EdgeCut",
    "Graph",
    "Path",
    "are_isomorphic",
    "bipartition",
    "canonical_form",
    "decompose",
    "edge_connectivity",
    "essential_4ec",
    "girth",
]
