"""
Element-wise multiplier certificates and the experiments built on them.

A(R) is never computed. An element z is certified relative to one system
of parameters at a time: z·((x_1..x_{k-1}) : x_k) ⊆ (x_1..x_{k-1}) for
every k. Certified elements let monomial colons over the parameters
behave as if the parameters were variables, and perturbing one parameter
by a certified element keeps the relation type.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.algebra.groebner import (
    IdealHandle,
    colon_ideal,
    ideal_power,
    ideals_equal,
    intersect,
)
from src.algebra.monres import MonomialIdeal, monomial_colon, random_monomial_ideal
from src.algebra.polyring import Monomial, Polynomial
from src.algebra.quotient import QuotientRing, colon_in_quotient, is_system_of_parameters
from src.algebra.rees import rees_presentation, relation_type
from src.utilis.errors import PreconditionError
from src.utilis.logger import logger


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

@dataclass
class ColonCheck:
    """z·((x_1..x_{k-1}) : x_k) ⊆ (x_1..x_{k-1}) at one index k (1-based)."""

    k: int
    colon: List[str]
    passed: bool
    witness: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "colon": self.colon, "passed": self.passed, "witness": self.witness}


@dataclass
class MultiplierCertificate:
    ring: QuotientRing
    z: Polynomial
    sop: Tuple[Polynomial, ...]
    checks: List[ColonCheck] = field(default_factory=list)
    power: int = 1
    degenerate: bool = False

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_at(self) -> Optional[int]:
        for c in self.checks:
            if not c.passed:
                return c.k
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "z": str(self.z),
            "sop": [str(x) for x in self.sop],
            "power": self.power,
            "degenerate": self.degenerate,
            "verdict": "pass" if self.verdict else "fail",
            "checks": [c.to_dict() for c in self.checks],
        }


def _require_sop(R: QuotientRing, sop: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
    sop = tuple(R.ring.convert(x) for x in sop)
    if not is_system_of_parameters(R, sop):
        raise PreconditionError(
            f"({', '.join(str(x) for x in sop)}) is not a system of parameters of {R}"
        )
    return sop


def _colon_checks(R: QuotientRing, z: Polynomial, sop: Sequence[Polynomial]) -> List[ColonCheck]:
    checks = []
    for k in range(1, len(sop) + 1):
        prefix = list(sop[: k - 1])
        colon = colon_in_quotient(R, prefix, [sop[k - 1]])
        target = R.ideal(prefix)
        witness = next((c for c in colon if not target.contains(z * c)), None)
        checks.append(
            ColonCheck(
                k=k,
                colon=[str(c) for c in colon],
                passed=witness is None,
                witness=str(witness) if witness is not None else None,
            )
        )
    return checks


def cm_multiplier_check(
    R: QuotientRing,
    z: Polynomial,
    sop: Sequence[Polynomial],
    max_power: int = 1,
) -> MultiplierCertificate:
    """Certify z as a Cohen-Macaulay multiplier for `sop`.

    When z fails, the powers z², ..., z^max_power are tried in turn; the
    certificate records the power that passed, or the last one tried.

    Raises:
        PreconditionError: if `sop` is not a system of parameters.
    """
    if max_power < 1:
        raise PreconditionError("max_power must be at least 1")
    sop = _require_sop(R, sop)
    z = R.ring.convert(z)
    if R.is_zero(z):
        logger.warning("multiplier check on z = 0 passes vacuously")
        checks = [ColonCheck(k, [], True) for k in range(1, len(sop) + 1)]
        return MultiplierCertificate(R, z, sop, checks, power=1, degenerate=True)

    cert = None
    for power in range(1, max_power + 1):
        checks = _colon_checks(R, R.normal_form(z ** power), sop)
        cert = MultiplierCertificate(R, z, sop, checks, power=power)
        if cert.verdict:
            break
        logger.info("z^%d = (%s)^%d fails at k=%d", power, z, power, cert.failed_at())
    logger.info("multiplier %s on %d parameters: %s", z, len(sop), "pass" if cert.verdict else "fail")
    return cert


def certify_on_both(
    R: QuotientRing,
    alpha: Polynomial,
    sop: Sequence[Polynomial],
    perturbed: Sequence[Polynomial],
) -> bool:
    """alpha passes the multiplier check on the original and the perturbed parameters."""
    return cm_multiplier_check(R, alpha, sop).verdict and cm_multiplier_check(R, alpha, perturbed).verdict


# ---------------------------------------------------------------------------
# Colon transfer
# ---------------------------------------------------------------------------

def _specialize(m: Monomial, sop: Sequence[Polynomial]) -> Polynomial:
    """x^m for parameters x = sop."""
    result = sop[0].ring.one
    for x, e in zip(sop, m):
        if e:
            result = result * x ** e
    return result


def _transfer_holds(
    R: QuotientRing,
    z: Polynomial,
    sop: Sequence[Polynomial],
    Iexp: MonomialIdeal,
    m: Monomial,
) -> bool:
    I_R = [_specialize(g, sop) for g in Iexp.gens]
    left = colon_in_quotient(R, I_R, [_specialize(m, sop)])
    right = [_specialize(g, sop) for g in monomial_colon(Iexp, m).gens]
    right_ideal = R.ideal(right)
    left_ideal = R.ideal(left)
    if not all(right_ideal.contains(z * f) for f in left):
        return False
    return all(left_ideal.contains(g) for g in right)


def colon_transfer_check(
    R: QuotientRing,
    z: Polynomial,
    sop: Sequence[Polynomial],
    Iexp: MonomialIdeal,
    m: Monomial,
) -> bool:
    """Check z·(IR : x^m) ⊆ (I : X^m)R ⊆ (IR : x^m).

    Args:
        R: Base ring.
        z: Candidate multiplier.
        sop: The parameters x_1..x_d substituted for X_1..X_d.
        Iexp: Monomial ideal in the exponents of the parameters.
        m: Exponent vector of the parameter monomial.

    Raises:
        PreconditionError: if `sop` is not a system of parameters or the
            exponent data does not have d entries.
    """
    sop = _require_sop(R, sop)
    if Iexp.nvars != len(sop) or len(m) != len(sop):
        raise PreconditionError("exponent data must match the number of parameters")
    z = R.ring.convert(z)
    verdict = _transfer_holds(R, z, sop, Iexp, tuple(m))
    logger.debug("colon transfer z=%s I=%s m=%s: %s", z, Iexp.gens, m, verdict)
    return verdict


def random_transfer_instance(
    rng: random.Random,
    d: int,
    max_gens: int = 3,
    max_exp: int = 2,
) -> Tuple[MonomialIdeal, Monomial]:
    """A random (I, m) pair in d parameter-exponents."""
    Iexp = random_monomial_ideal(rng, d, max_gens, max_exp)
    m = tuple(rng.randint(0, max_exp) for _ in range(d))
    return Iexp, m


def _exponent_vectors(d: int, max_exp: int) -> List[Monomial]:
    vectors = [v for v in itertools.product(range(max_exp + 1), repeat=d) if any(v)]
    return sorted(vectors, key=lambda v: (sum(v), tuple(-e for e in v)))


def find_transfer_failure(
    R: QuotientRing,
    z: Polynomial,
    sop: Sequence[Polynomial],
    max_exp: int = 1,
) -> Optional[Tuple[MonomialIdeal, Monomial]]:
    """First principal instance (X^a) : X^m, by increasing degree, where the transfer fails.

    Returns None when every instance with exponents ≤ max_exp holds.
    """
    sop = _require_sop(R, sop)
    z = R.ring.convert(z)
    vectors = _exponent_vectors(len(sop), max_exp)
    for a in vectors:
        Iexp = MonomialIdeal.of([a], len(sop))
        for m in vectors:
            if Iexp.contains(m):
                continue
            if not _transfer_holds(R, z, sop, Iexp, m):
                logger.info("colon transfer fails for z=%s at I=%s m=%s", z, Iexp.gens, m)
                return Iexp, m
    return None


# ---------------------------------------------------------------------------
# Superficial elements
# ---------------------------------------------------------------------------

def superficial_check(
    R: QuotientRing,
    Igens: Sequence[Polynomial],
    x: Polynomial,
    c: int,
    nmax: int,
) -> bool:
    """Bounded check that (I^n : x) ∩ I^c = I^{n−1} for c < n ≤ nmax.

    Raises:
        PreconditionError: if x ∉ I, c < 0 or nmax ≤ c.
    """
    if c < 0 or nmax <= c:
        raise PreconditionError("need 0 <= c < nmax")
    ring = R.ring
    x = ring.convert(x)
    base = IdealHandle(ring, [ring.convert(g) for g in Igens])
    if not R.ideal(base.generators).contains(x):
        raise PreconditionError(f"{x} is not in the ideal")
    if R.is_zero(x):
        logger.warning("superficial check on the zero element reports false")
        return False

    def lifted(n: int) -> IdealHandle:
        return R.ideal(ideal_power(base, n).generators)

    bound = lifted(c)
    for n in range(c + 1, nmax + 1):
        lhs = intersect(colon_ideal(lifted(n), x), bound)
        if not ideals_equal(lhs, lifted(n - 1)):
            logger.info("%s is not superficial: equality fails at n=%d, c=%d", x, n, c)
            return False
    return True


# ---------------------------------------------------------------------------
# Perturbation
# ---------------------------------------------------------------------------

@dataclass
class PerturbationReport:
    sop: List[str]
    perturbed: List[str]
    alpha: str
    index: int
    certified: bool
    rt_x: int
    rt_y: int
    superficial_x: Optional[bool] = None
    superficial_y: Optional[bool] = None

    @property
    def equal(self) -> bool:
        return self.rt_x == self.rt_y

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sop": self.sop,
            "perturbed": self.perturbed,
            "alpha": self.alpha,
            "index": self.index,
            "certified": self.certified,
            "rt_x": self.rt_x,
            "rt_y": self.rt_y,
            "equal": self.equal,
            "superficial_x": self.superficial_x,
            "superficial_y": self.superficial_y,
        }


def perturb(sop: Sequence[Polynomial], alpha: Polynomial, index: int) -> List[Polynomial]:
    """Replace x_index (1-based) by x_index + alpha."""
    if not 1 <= index <= len(sop):
        raise PreconditionError(f"index {index} outside 1..{len(sop)}")
    out = list(sop)
    out[index - 1] = out[index - 1] + out[index - 1].ring.convert(alpha)
    return out


def rt_perturbation_experiment(
    R: QuotientRing,
    sop: Sequence[Polynomial],
    alpha: Polynomial,
    index: int,
    superficial_nmax: Optional[int] = None,
    certified: Optional[bool] = None,
) -> PerturbationReport:
    """Compare rt(x) with rt(y) where y = x with x_index replaced by x_index + alpha.

    With `superficial_nmax`, the last parameter is also checked for
    superficiality (c = 0) before and after the perturbation. A caller that
    already certified alpha passes the verdict as `certified`.

    Raises:
        PreconditionError: if either tuple is not a system of parameters.
    """
    sop = _require_sop(R, sop)
    alpha = R.ring.convert(alpha)
    perturbed = tuple(perturb(sop, alpha, index))
    if not is_system_of_parameters(R, perturbed):
        raise PreconditionError("the perturbed tuple is not a system of parameters")

    if certified is None:
        certified = certify_on_both(R, alpha, sop, perturbed)
    if not certified:
        logger.warning("alpha = %s is not certified on both parameter systems", alpha)

    rt_x = relation_type(rees_presentation(R, sop))
    rt_y = relation_type(rees_presentation(R, perturbed))
    report = PerturbationReport(
        sop=[str(x) for x in sop],
        perturbed=[str(y) for y in perturbed],
        alpha=str(alpha),
        index=index,
        certified=certified,
        rt_x=rt_x,
        rt_y=rt_y,
    )
    if superficial_nmax is not None:
        report.superficial_x = superficial_check(R, sop, sop[-1], 0, superficial_nmax)
        report.superficial_y = superficial_check(R, perturbed, perturbed[-1], 0, superficial_nmax)
    if certified and not report.equal:
        logger.warning("relation types differ under a certified perturbation: %d vs %d", rt_x, rt_y)
    logger.info("perturbation at index %d by %s: rt %d -> %d", index, alpha, rt_x, rt_y)
    return report
