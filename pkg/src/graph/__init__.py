"""ReesType graph package."""

from src.graph.builder import build_example21_graph, build_perturbation_graph
from src.graph.state import Example21State, PerturbationState

__all__ = [
    "build_example21_graph",
    "build_perturbation_graph",
    "Example21State",
    "PerturbationState",
]
