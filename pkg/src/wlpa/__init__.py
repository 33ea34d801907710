"""Gelfand-Kirillov dimension and matrix decompositions of weighted Leavitt path algebras."""

from .graph import Edge, GraphError, Letter, WeightedGraph
from .io import load_fixture, parse_graph, read_graph, render_graph
from .nod import NodAutomaton, all_bases, choose_base, forbidden_pairs
from .quasicycles import (QcClass, QuasiCycle, enumerate_quasicycles, implies,
                          is_nod2, is_quasicycle, is_selfconnected, quasicycle_classes)

__all__ = [
    "Edge", "GraphError", "Letter", "WeightedGraph",
    "load_fixture", "parse_graph", "read_graph", "render_graph",
    "NodAutomaton", "all_bases", "choose_base", "forbidden_pairs",
    "QcClass", "QuasiCycle", "enumerate_quasicycles", "implies", "is_nod2",
    "is_quasicycle", "is_selfconnected", "quasicycle_classes",
]
