"""
LangGraph state definitions for the ReesType workflows.

Example21State flows through build_ring → present → relation_type →
irreducibility → report; PerturbationState through certify →
(raise_power) → compare → report.
"""

from typing import Any, Dict, List, Optional, TypedDict

from src.algebra.polyring import Polynomial
from src.algebra.quotient import QuotientRing
from src.algebra.rees import ReesPresentation


class Example21State(TypedDict, total=False):
    """State for replicating the non-Cohen-Macaulay family at one n."""

    # --- Inputs ---
    n: int
    m: int
    prime: Optional[int]

    # --- build_ring outputs ---
    ring: QuotientRing
    gens: List[Polynomial]

    # --- present outputs ---
    presentation: ReesPresentation
    bad_relations: List[str]

    # --- relation_type outputs ---
    rt: int

    # --- irreducibility outputs ---
    relation: str
    irreducible: bool

    # --- report outputs ---
    final_output: Dict[str, Any]

    # --- Control flow ---
    error: Optional[str]


class PerturbationState(TypedDict, total=False):
    """State for the relation-type perturbation experiment."""

    # --- Inputs ---
    ring: QuotientRing
    sop: List[Polynomial]
    alpha: Polynomial
    index: int
    max_power: int
    superficial_nmax: Optional[int]

    # --- certify outputs ---
    power: int
    certificates: List[Dict[str, Any]]
    certified: bool

    # --- compare outputs ---
    comparison: Dict[str, Any]

    # --- report outputs ---
    final_output: Dict[str, Any]

    # --- Control flow ---
    error: Optional[str]
