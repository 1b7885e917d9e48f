"""
Command-line driver for ReesType.

Every subcommand prints one JSON report on stdout and exits with
0 on success, 2 on parse errors, 3 on failed preconditions and 4 when a
Gröbner computation runs past the degree cap.

Usage:
    python -m src.cli rees-rt --ring poly2.ring --gens "x,y"
    python -m src.cli replicate-example21 --n 2
    python -m src.cli ramsey --d 2 --k 0 --l 2 --mmax 6
"""

import argparse
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from src.algebra.groebner import buchberger
from src.algebra.monres import (
    MonomialIdeal,
    base_change,
    is_complex,
    mapping_cone_resolution,
    syzygy_complex,
    verify_rank_height,
)
from src.algebra.multipliers import (
    cm_multiplier_check,
    colon_transfer_check,
    find_transfer_failure,
    random_transfer_instance,
)
from src.algebra.polyring import MonomialOrder, Polynomial
from src.algebra.quotient import QuotientRing, fedder_fpure, frobenius_closure_violations
from src.algebra.ramsey import bound_constants, ramsey_number_search, search_oracle
from src.algebra.rees import (
    rees_polynomial_ring,
    rees_presentation,
    relation_type,
    two_param_descent,
)
from src.graph.builder import DEFAULT_MAX_POWER, build_example21_graph, build_perturbation_graph
from src.tools.parsing import (
    RingFile,
    load_ring_file,
    parse_ideal_argument,
    parse_polynomial,
)
from src.tools.report import build_report, dump_report, error_report
from src.utilis.config import degree_cap_override
from src.utilis.errors import ParseError, ReesTypeError
from src.utilis.logger import logger

Handler = Callable[[argparse.Namespace], Tuple[Dict[str, Any], Dict[str, Any]]]


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _ring(args: argparse.Namespace) -> Tuple[RingFile, QuotientRing]:
    ring_file = load_ring_file(args.ring)
    return ring_file, ring_file.quotient()


def _monomial_ideal(gens: Sequence[Polynomial]) -> MonomialIdeal:
    exponents = []
    for g in gens:
        if len(g) != 1:
            raise ParseError(f"{g} is not a monomial")
        exponents.append(g.lm)
    return MonomialIdeal.of(exponents, gens[0].ring.nvars)


def _parse_variable_order(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise ParseError(f"--variable-order expects comma-separated indices, got {text!r}") from None


def _parse_sweep(text: str) -> List[int]:
    try:
        low, high = (int(part) for part in text.split(".."))
    except ValueError:
        raise ParseError(f"--sweep expects a..b, got {text!r}") from None
    if low < 1 or high < low:
        raise ParseError(f"empty or invalid sweep range {text!r}")
    return list(range(low, high + 1))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_gb(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    ring_file, R = _ring(args)
    order = MonomialOrder.lex() if args.order == "lex" else MonomialOrder.grevlex()
    ring = R.ring.with_order(order)
    gens = [ring.convert(g) for g in parse_ideal_argument(ring, args.gens)]
    gens += [ring.convert(h) for h in R.J.generators]
    basis = buchberger(gens)
    inputs = {"ring": ring_file.to_dict(), "gens": args.gens, "order": args.order}
    return inputs, {"basis": [str(g) for g in basis], "size": len(basis)}


def cmd_rees_rt(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    ring_file, R = _ring(args)
    gens = parse_ideal_argument(R.ring, args.gens)
    P = rees_presentation(R, gens)
    inputs = {"ring": ring_file.to_dict(), "gens": args.gens}
    return inputs, {"rt": relation_type(P), **P.to_dict()}


def cmd_descent(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    ring_file, R = _ring(args)
    gens = parse_ideal_argument(R.ring, args.gens)
    if len(gens) != 2:
        raise ParseError("descent takes exactly two parameters")
    Pring = rees_polynomial_ring(R.ring, 2)
    F = parse_polynomial(Pring, args.relation)
    gamma = parse_polynomial(R.ring, args.gamma)
    result = two_param_descent(R, gens, F, gamma)
    inputs = {"ring": ring_file.to_dict(), "gens": args.gens, "relation": args.relation, "gamma": args.gamma}
    return inputs, result.to_dict()


def cmd_resolve(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    ring_file, R = _ring(args)
    gens = parse_ideal_argument(R.ring, args.gens)
    I = _monomial_ideal(gens)
    polynomial = QuotientRing(R.ring)
    if args.kind == "cone":
        C = mapping_cone_resolution(I, ring=polynomial.ring)
        expected = None
    else:
        order = _parse_variable_order(args.variable_order) if args.variable_order else None
        C = syzygy_complex(I, args.kind, order, polynomial.ring)
        expected = {1: 1}
    positions = None if args.kind == "cone" else [1]
    results: Dict[str, Any] = {"complex": C.to_dict(), "is_complex": is_complex(C)}
    results["conditions"] = verify_rank_height(polynomial, C, positions, expected).to_dict()
    if not R.J.is_zero():
        changed = base_change(C, R, R.ring.gens())
        results["base_changed"] = {
            "is_complex": is_complex(changed, R),
            "conditions": verify_rank_height(R, changed, positions, expected).to_dict(),
        }
    inputs = {"ring": ring_file.to_dict(), "gens": args.gens, "kind": args.kind, "variable_order": args.variable_order}
    return inputs, results


def cmd_multiplier(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    ring_file, R = _ring(args)
    sop = parse_ideal_argument(R.ring, args.sop)
    z = parse_polynomial(R.ring, args.z)
    cert = cm_multiplier_check(R, z, sop, max_power=args.max_power)
    results: Dict[str, Any] = {"certificate": cert.to_dict()}
    if args.transfer_samples:
        rng = random.Random(args.seed)
        zz = z ** cert.power
        instances = []
        for _ in range(args.transfer_samples):
            Iexp, m = random_transfer_instance(rng, len(sop))
            instances.append(
                {"I": [list(g) for g in Iexp.gens], "m": list(m), "holds": colon_transfer_check(R, zz, sop, Iexp, m)}
            )
        results["transfer"] = instances
    if args.find_failure:
        failure = find_transfer_failure(R, z, sop)
        results["transfer_failure"] = (
            {"I": [list(g) for g in failure[0].gens], "m": list(failure[1])} if failure else None
        )
    inputs = {
        "ring": ring_file.to_dict(),
        "sop": args.sop,
        "z": args.z,
        "max_power": args.max_power,
        "transfer_samples": args.transfer_samples,
        "seed": args.seed,
        "find_failure": args.find_failure,
    }
    return inputs, results


def cmd_perturb(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    ring_file, R = _ring(args)
    sop = list(parse_ideal_argument(R.ring, args.sop))
    alpha = parse_polynomial(R.ring, args.alpha)
    graph = build_perturbation_graph()
    final_state = graph.invoke(
        {
            "ring": R,
            "sop": sop,
            "alpha": alpha,
            "index": args.index,
            "max_power": args.max_power,
            "superficial_nmax": args.superficial_nmax,
            "power": 1,
            "error": None,
        }
    )
    inputs = {
        "ring": ring_file.to_dict(),
        "sop": args.sop,
        "alpha": args.alpha,
        "index": args.index,
        "max_power": args.max_power,
        "superficial_nmax": args.superficial_nmax,
    }
    return inputs, final_state["final_output"]


def cmd_ramsey(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    result = ramsey_number_search(args.d, args.k, args.l, args.mmax, args.node_budget)
    results: Dict[str, Any] = result.to_dict()
    results.pop("nodes", None)
    if args.bound_L is not None:
        constants = bound_constants(args.d, args.bound_L, search_oracle(args.mmax, args.node_budget), args.steps)
        results["bound_constants"] = constants.to_dict()
    inputs = {
        "d": args.d,
        "k": args.k,
        "l": args.l,
        "mmax": args.mmax,
        "node_budget": args.node_budget,
        "bound_L": args.bound_L,
        "steps": args.steps,
    }
    return inputs, results


def cmd_fedder(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    ring_file, R = _ring(args)
    results: Dict[str, Any] = {"f_pure": fedder_fpure(R.J)}
    if args.samples:
        ring = R.ring
        test_ideals = [[]] + [[v] for v in ring.gens()] + [ring.gens()]
        violations = frobenius_closure_violations(R.J, test_ideals, samples=args.samples, seed=args.seed)
        results["sampled_violations"] = [v.to_dict() for v in violations]
        results["sampling_agrees"] = (not violations) == results["f_pure"]
    inputs = {"ring": ring_file.to_dict(), "samples": args.samples, "seed": args.seed}
    return inputs, results


def _example21_worker(n: int, m: int, prime: Optional[int], cap: Optional[int]) -> Dict[str, Any]:
    with degree_cap_override(cap):
        graph = build_example21_graph()
        final_state = graph.invoke({"n": n, "m": m, "prime": prime, "error": None})
    if final_state.get("error"):
        return {"n": n, "error": final_state["error"], "bad_relations": final_state.get("bad_relations", [])}
    return final_state["final_output"]


def cmd_replicate_example21(args: argparse.Namespace) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    values = _parse_sweep(args.sweep) if args.sweep else [args.n]
    inputs = {"n": args.n, "m": args.m, "prime": args.prime, "sweep": args.sweep}
    if args.jobs > 1 and len(values) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(_example21_worker, n, args.m, args.prime, args.degree_cap) for n in values]
            runs = [future.result() for future in futures]
    else:
        runs = [_example21_worker(n, args.m, args.prime, args.degree_cap) for n in values]
    failed = [run for run in runs if "error" in run]
    if failed:
        details = "; ".join(f"n={run['n']}: {run['error']}" for run in failed)
        raise ReesTypeError(f"family run failed for {details}")
    results = runs[0] if not args.sweep else {"runs": runs}
    return inputs, results


COMMANDS: Dict[str, Handler] = {
    "gb": cmd_gb,
    "rees-rt": cmd_rees_rt,
    "descent": cmd_descent,
    "resolve": cmd_resolve,
    "multiplier": cmd_multiplier,
    "perturb": cmd_perturb,
    "ramsey": cmd_ramsey,
    "fedder": cmd_fedder,
    "replicate-example21": cmd_replicate_example21,
}


# ---------------------------------------------------------------------------
# Argument parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree-cap", type=int, default=None, help="Gröbner degree cap (default: REESTYPE_DEGREE_CAP or 60)")
    common.add_argument("--no-timings", action="store_true", help="omit timings so reports are byte-identical")

    parser = argparse.ArgumentParser(prog="reestype", description="Relation type of Rees algebras over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("gb", "reduced Gröbner basis of (gens) + J")
    p.add_argument("--ring", required=True)
    p.add_argument("--gens", required=True)
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")

    p = add("rees-rt", "relation type of an ideal")
    p.add_argument("--ring", required=True)
    p.add_argument("--gens", required=True)

    p = add("descent", "lower the degree of a relation on two parameters")
    p.add_argument("--ring", required=True)
    p.add_argument("--gens", required=True, help="the two parameters x,y")
    p.add_argument("--relation", required=True, help="binary form in T1, T2")
    p.add_argument("--gamma", required=True, help="regular element")

    p = add("resolve", "monomial complexes and their rank/height conditions")
    p.add_argument("--ring", required=True)
    p.add_argument("--gens", required=True, help="monomial generators")
    p.add_argument("--kind", choices=["cone", "pairwise", "stable"], default="cone")
    p.add_argument("--variable-order", default=None, help="comma-separated 0-based indices, largest first")

    p = add("multiplier", "Cohen-Macaulay multiplier certificate")
    p.add_argument("--ring", required=True)
    p.add_argument("--sop", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--max-power", type=int, default=1)
    p.add_argument("--transfer-samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--find-failure", action="store_true")

    p = add("perturb", "relation type before and after perturbing one parameter")
    p.add_argument("--ring", required=True)
    p.add_argument("--sop", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--index", type=int, default=1, help="1-based parameter index")
    p.add_argument("--max-power", type=int, default=DEFAULT_MAX_POWER)
    p.add_argument("--superficial-nmax", type=int, default=None)

    p = add("ramsey", "chain thresholds M(d, k, l)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mmax", type=int, default=10)
    p.add_argument("--node-budget", type=int, default=2_000_000)
    p.add_argument("--bound-L", dest="bound_L", type=int, default=None, help="also compute the bound constants for this L")
    p.add_argument("--steps", type=int, default=1)

    p = add("fedder", "F-purity of the ring by Fedder's criterion")
    p.add_argument("--ring", required=True)
    p.add_argument("--samples", type=int, default=0, help="cross-check by Frobenius-closure sampling")
    p.add_argument("--seed", type=int, default=0)

    p = add("replicate-example21", "rt of I_n in k[x,y,z,w]/(w^2, wz)")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--m", type=int, default=2, help="number of parameter variables")
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--sweep", default=None, help="range a..b of n values")
    p.add_argument("--jobs", type=int, default=1)

    return parser


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------

def run(argv: Optional[Sequence[str]] = None) -> Tuple[int, Dict[str, Any]]:
    """Execute one command line.

    Returns:
        (exit code, report dict).
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if not exc.code:
            return 0, build_report("help", {"argv": argv}, {"usage": parser.format_usage().strip()})
        code = exc.code if isinstance(exc.code, int) else 2
        return code, error_report("argparse", {"argv": argv}, ParseError("invalid command line"), code)

    handler = COMMANDS[args.command]
    logger.info("Command %s started: %s", args.command, argv)
    started = time.perf_counter()
    try:
        with degree_cap_override(args.degree_cap):
            inputs, results = handler(args)
    except ReesTypeError as exc:
        logger.error("Command %s failed (exit %d): %s", args.command, exc.exit_code, exc)
        return exc.exit_code, error_report(args.command, {"argv": argv}, exc, exc.exit_code)
    except Exception as exc:
        logger.exception("Command %s crashed: %s", args.command, exc)
        return 1, error_report(args.command, {"argv": argv}, exc, 1)

    elapsed = None if args.no_timings else time.perf_counter() - started
    report = build_report(args.command, inputs, results, elapsed)
    logger.info("Command %s completed", args.command)
    return 0, report


def main() -> None:
    code, report = run()
    print(dump_report(report))
    sys.exit(code)


if __name__ == "__main__":
    main()
