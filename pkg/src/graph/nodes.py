"""
Node functions for the ReesType workflows.

Each node takes the current state dict and returns the updated state,
leaving every key it does not own untouched.
"""

from typing import Any, Dict

from src.algebra.multipliers import cm_multiplier_check, perturb, rt_perturbation_experiment
from src.algebra.rees import (
    example21_ideal,
    example21_relation,
    example21_ring,
    is_relation,
    rees_presentation,
    reducible_to_lower_degree,
    relation_type,
)
from src.utilis.logger import logger


# ---------------------------------------------------------------------------
# Non-Cohen-Macaulay family
# ---------------------------------------------------------------------------

def run_build_ring(state: Dict[str, Any]) -> Dict[str, Any]:
    """Build S/(w², wz) and the generators of I_n."""
    n = state["n"]
    m = state.get("m", 2)
    R = example21_ring(m, state.get("prime"))
    gens = example21_ideal(R, n)
    logger.info("Example ring %s, I_%d = (%s)", R, n, ", ".join(str(g) for g in gens))
    return {**state, "ring": R, "gens": gens}


def run_present(state: Dict[str, Any]) -> Dict[str, Any]:
    """Compute the presentation and check every generator is a relation."""
    R, gens = state["ring"], state["gens"]
    P = rees_presentation(R, gens)
    bad = [str(r) for r in P.relations if not is_relation(R, r, gens)]
    if bad:
        logger.error("Presentation check failed: %d generators are not relations", len(bad))
        return {
            **state,
            "presentation": P,
            "bad_relations": bad,
            "error": f"{len(bad)} presentation generators do not vanish on the ideal",
        }
    return {**state, "presentation": P, "bad_relations": []}


def run_relation_type(state: Dict[str, Any]) -> Dict[str, Any]:
    rt = relation_type(state["presentation"])
    logger.info("rt(I_%d) = %d", state["n"], rt)
    return {**state, "rt": rt}


def run_irreducibility(state: Dict[str, Any]) -> Dict[str, Any]:
    """Is w·T1^n − w·T2^(n−1)·T3 outside the lower-degree part of Q?"""
    P, n = state["presentation"], state["n"]
    F = example21_relation(P, n)
    irreducible = not reducible_to_lower_degree(P, F)
    logger.info("%s irreducible to lower degree: %s", F, irreducible)
    return {**state, "relation": str(F), "irreducible": irreducible}


def run_example21_report(state: Dict[str, Any]) -> Dict[str, Any]:
    P = state["presentation"]
    n = state["n"]
    final_output: Dict[str, Any] = {
        "n": n,
        "m": state.get("m", 2),
        "prime": state["ring"].characteristic,
        "ring": repr(state["ring"]),
        "generators": [str(g) for g in state["gens"]],
        "presentation_degrees": sorted(set(P.degrees())),
        "relation_count": len(P.relations),
        "rt": state["rt"],
        "rt_at_least_n": state["rt"] >= n,
        "relation": state["relation"],
        "irreducible": state["irreducible"],
    }
    logger.info("Example report: rt=%d, irreducible=%s", state["rt"], state["irreducible"])
    return {**state, "final_output": final_output}


# ---------------------------------------------------------------------------
# Perturbation
# ---------------------------------------------------------------------------

def run_certify(state: Dict[str, Any]) -> Dict[str, Any]:
    """Certify alpha^power on the original and the perturbed parameters."""
    R, sop, index = state["ring"], state["sop"], state["index"]
    power = state.get("power", 1)
    z = state["alpha"] ** power
    perturbed = perturb(sop, z, index)
    certificates = [cm_multiplier_check(R, z, sop), cm_multiplier_check(R, z, perturbed)]
    certified = all(c.verdict for c in certificates)
    logger.info("alpha^%d certified: %s", power, certified)
    return {
        **state,
        "power": power,
        "certificates": [c.to_dict() for c in certificates],
        "certified": certified,
    }


def run_raise_power(state: Dict[str, Any]) -> Dict[str, Any]:
    power = state.get("power", 1) + 1
    logger.info("Raising the multiplier to power %d", power)
    return {**state, "power": power}


def run_compare(state: Dict[str, Any]) -> Dict[str, Any]:
    R = state["ring"]
    z = state["alpha"] ** state.get("power", 1)
    report = rt_perturbation_experiment(
        R,
        state["sop"],
        z,
        state["index"],
        superficial_nmax=state.get("superficial_nmax"),
        certified=state.get("certified"),
    )
    return {**state, "comparison": report.to_dict()}


def run_perturbation_report(state: Dict[str, Any]) -> Dict[str, Any]:
    comparison = state["comparison"]
    final_output = {
        **comparison,
        "power": state.get("power", 1),
        "certificates": state.get("certificates", []),
    }
    if comparison["certified"] and not comparison["equal"]:
        logger.warning("Certified perturbation changed the relation type")
    return {**state, "final_output": final_output}
