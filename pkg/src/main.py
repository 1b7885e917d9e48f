"""
ReesType — main entry point.

High-level functions that run the relation-type computations and the
LangGraph pipelines and return structured JSON-ready output. Failures
come back as error payloads instead of exceptions.
"""

import time
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from src.algebra.rees import rees_presentation, relation_type
from src.graph.builder import DEFAULT_MAX_POWER, build_example21_graph, build_perturbation_graph
from src.tools.parsing import parse_ideal_argument, parse_polynomial, parse_ring_file
from src.utilis.errors import ReesTypeError
from src.utilis.logger import logger

load_dotenv()


def _error_payload(exc: Exception) -> Dict[str, Any]:
    exit_code = getattr(exc, "exit_code", 1)
    return {"error": str(exc), "error_type": type(exc).__name__, "exit_code": exit_code}


def compute_relation_type(ring_text: str, gens_text: str) -> Dict[str, Any]:
    """Relation type of the ideal `gens_text` in the ring described by `ring_text`.

    Args:
        ring_text: Ring-file text (`char`, `vars`, `rel` lines).
        gens_text: Comma-separated generator list.

    Returns:
        Dict with rt, the presentation generators and their degrees, or an
        error payload.
    """
    logger.info("=" * 60)
    logger.info("Relation type started: gens=%s", gens_text)
    logger.info("=" * 60)

    if not ring_text.strip() or not gens_text.strip():
        return {"error": "A ring definition and a generator list are required", "exit_code": 2}

    try:
        R = parse_ring_file(ring_text).quotient()
        gens = parse_ideal_argument(R.ring, gens_text)
        started = time.perf_counter()
        P = rees_presentation(R, gens)
        rt = relation_type(P)
        result = {
            "ring": repr(R),
            "generators": [str(g) for g in P.gens],
            "rt": rt,
            "relations": [{"poly": str(r), "degree": r.degree} for r in P.relations],
            "elapsed_seconds": round(time.perf_counter() - started, 4),
        }
        logger.info("Relation type completed: rt=%d", rt)
        return result

    except ReesTypeError as exc:
        logger.error("Relation type failed: %s", exc)
        return _error_payload(exc)
    except Exception as exc:
        logger.exception("Relation type pipeline error: %s", exc)
        return {"error": f"Pipeline error: {exc}", "exit_code": 1}


def replicate_example21(n: int, m: int = 2, prime: Optional[int] = None) -> Dict[str, Any]:
    """Run the non-Cohen-Macaulay family pipeline for one n.

    Args:
        n: Index of the ideal I_n; the interesting relation has degree n.
        m: Number of parameter variables (2 for the four-variable ring).
        prime: Characteristic; defaults to REESTYPE_PRIME.

    Returns:
        Dict with rt, the irreducibility verdict of w·T1^n − w·T2^(n−1)·T3
        and presentation data, or an error payload.
    """
    logger.info("=" * 60)
    logger.info("Example family started: n=%d, m=%d", n, m)
    logger.info("=" * 60)

    try:
        graph = build_example21_graph()
        initial_state: Dict[str, Any] = {"n": n, "m": m, "prime": prime, "error": None}
        final_state = graph.invoke(initial_state)
        if final_state.get("error"):
            return {
                "error": final_state["error"],
                "bad_relations": final_state.get("bad_relations", []),
                "exit_code": 1,
            }
        result = final_state.get("final_output", {})
        logger.info("Example family completed: %s", result)
        return result

    except ReesTypeError as exc:
        logger.error("Example family failed: %s", exc)
        return _error_payload(exc)
    except Exception as exc:
        logger.exception("Example family pipeline error: %s", exc)
        return {"error": f"Pipeline error: {exc}", "exit_code": 1}


def run_perturbation(
    ring_text: str,
    sop_text: str,
    alpha_text: str,
    index: int,
    max_power: int = DEFAULT_MAX_POWER,
    superficial_nmax: Optional[int] = None,
) -> Dict[str, Any]:
    """Certify alpha (raising powers as needed) and compare the two relation types.

    Returns:
        Dict with rt_x, rt_y, equal, certified, the power used and the
        certificates, or an error payload.
    """
    logger.info("Perturbation started: sop=%s alpha=%s index=%d", sop_text, alpha_text, index)
    try:
        R = parse_ring_file(ring_text).quotient()
        sop = list(parse_ideal_argument(R.ring, sop_text))
        alpha = parse_polynomial(R.ring, alpha_text)
        graph = build_perturbation_graph()
        initial_state: Dict[str, Any] = {
            "ring": R,
            "sop": sop,
            "alpha": alpha,
            "index": index,
            "max_power": max_power,
            "superficial_nmax": superficial_nmax,
            "power": 1,
            "error": None,
        }
        final_state = graph.invoke(initial_state)
        return final_state.get("final_output", {})

    except ReesTypeError as exc:
        logger.error("Perturbation failed: %s", exc)
        return _error_payload(exc)
    except Exception as exc:
        logger.exception("Perturbation pipeline error: %s", exc)
        return {"error": f"Pipeline error: {exc}", "exit_code": 1}


if __name__ == "__main__":
    import json

    n_value = int(input("Enter n for the example family: ").strip() or "2")
    output = replicate_example21(n_value)
    print("\n" + json.dumps(output, indent=2))
