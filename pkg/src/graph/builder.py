"""
LangGraph workflow builders for ReesType.

Two pipelines:
    build_ring → present → relation_type → irreducibility → report
        (ends early if a presentation generator is not a relation)
    certify → (raise_power → certify)* → compare → report
"""

from typing import Any, Dict

from langgraph.graph import END, StateGraph

from src.graph.nodes import (
    run_build_ring,
    run_certify,
    run_compare,
    run_example21_report,
    run_irreducibility,
    run_perturbation_report,
    run_present,
    run_raise_power,
    run_relation_type,
)
from src.graph.state import Example21State, PerturbationState
from src.utilis.logger import logger

# ---------------------------------------------------------------------------
# Power cap for the certification retry loop
# ---------------------------------------------------------------------------
DEFAULT_MAX_POWER = 3


# ---------------------------------------------------------------------------
# Wrapper nodes
# ---------------------------------------------------------------------------

def build_ring_node(state: Dict[str, Any]) -> Dict[str, Any]:
    logger.info("=== Build ring node started ===")
    return run_build_ring(state)


def present_node(state: Dict[str, Any]) -> Dict[str, Any]:
    logger.info("=== Present node started ===")
    return run_present(state)


def relation_type_node(state: Dict[str, Any]) -> Dict[str, Any]:
    logger.info("=== Relation type node started ===")
    return run_relation_type(state)


def irreducibility_node(state: Dict[str, Any]) -> Dict[str, Any]:
    logger.info("=== Irreducibility node started ===")
    return run_irreducibility(state)


def example21_report_node(state: Dict[str, Any]) -> Dict[str, Any]:
    logger.info("=== Report node started ===")
    return run_example21_report(state)


def certify_node(state: Dict[str, Any]) -> Dict[str, Any]:
    logger.info("=== Certify node started ===")
    return run_certify(state)


def raise_power_node(state: Dict[str, Any]) -> Dict[str, Any]:
    logger.info("=== Raise power node started ===")
    return run_raise_power(state)


def compare_node(state: Dict[str, Any]) -> Dict[str, Any]:
    logger.info("=== Compare node started ===")
    return run_compare(state)


def perturbation_report_node(state: Dict[str, Any]) -> Dict[str, Any]:
    logger.info("=== Report node started ===")
    return run_perturbation_report(state)


# ---------------------------------------------------------------------------
# Conditional edges
# ---------------------------------------------------------------------------

def presentation_ok(state: Dict[str, Any]) -> str:
    """'continue' when every presentation generator is a relation, else 'end'."""
    if state.get("bad_relations"):
        logger.warning("Ending run: %s", state.get("error"))
        return "end"
    return "continue"


def should_raise_power(state: Dict[str, Any]) -> str:
    """'raise' while the certificate fails and the power cap allows, else 'compare'."""
    power = state.get("power", 1)
    max_power = state.get("max_power", DEFAULT_MAX_POWER)
    if not state.get("certified") and power < max_power:
        logger.info("Certificate failed at power %d of %d, retrying", power, max_power)
        return "raise"
    return "compare"


# ---------------------------------------------------------------------------
# Build the graphs
# ---------------------------------------------------------------------------

def build_example21_graph() -> StateGraph:
    """Construct and compile the non-Cohen-Macaulay family workflow.

    Returns:
        Compiled LangGraph StateGraph over Example21State.
    """
    workflow = StateGraph(Example21State)

    workflow.add_node("build_ring", build_ring_node)
    workflow.add_node("present", present_node)
    workflow.add_node("relation_type", relation_type_node)
    workflow.add_node("irreducibility", irreducibility_node)
    workflow.add_node("report", example21_report_node)

    workflow.set_entry_point("build_ring")
    workflow.add_edge("build_ring", "present")
    workflow.add_conditional_edges(
        "present",
        presentation_ok,
        {
            "continue": "relation_type",
            "end": END,
        },
    )
    workflow.add_edge("relation_type", "irreducibility")
    workflow.add_edge("irreducibility", "report")
    workflow.add_edge("report", END)

    compiled = workflow.compile()
    logger.info("Family graph compiled successfully")
    return compiled


def build_perturbation_graph() -> StateGraph:
    """Construct and compile the perturbation workflow.

    Graph:
        certify → (certificate failed and power < max_power) → raise_power → certify
        certify → compare → report → END

    Returns:
        Compiled LangGraph StateGraph over PerturbationState.
    """
    workflow = StateGraph(PerturbationState)

    workflow.add_node("certify", certify_node)
    workflow.add_node("raise_power", raise_power_node)
    workflow.add_node("compare", compare_node)
    workflow.add_node("report", perturbation_report_node)

    workflow.set_entry_point("certify")
    workflow.add_conditional_edges(
        "certify",
        should_raise_power,
        {
            "raise": "raise_power",
            "compare": "compare",
        },
    )
    workflow.add_edge("raise_power", "certify")
    workflow.add_edge("compare", "report")
    workflow.add_edge("report", END)

    compiled = workflow.compile()
    logger.info("Perturbation graph compiled successfully")
    return compiled
