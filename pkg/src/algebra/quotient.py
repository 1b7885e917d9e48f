"""
Quotient rings R = k[x]/J and the tests that live in them: regularity,
systems of parameters, colons, and Frobenius purity.

The graded polynomial quotient stands in for a complete local ring; all
inputs used with it are homogeneous, for which the two agree on every
quantity computed here.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from src.algebra.groebner import (
    IdealHandle,
    colon_ideal,
    dimension,
    ideals_equal,
    intersect,
)
from src.algebra.polyring import MonomialOrder, Polynomial, PolyRing
from src.utilis.errors import PreconditionError
from src.utilis.logger import logger


class QuotientRing:
    """R = ring / J with J proper."""

    def __init__(self, ring: PolyRing, relations: Sequence[Polynomial] = ()) -> None:
        self.ring = ring
        self.J = IdealHandle(ring, relations)
        if self.J.is_unit():
            raise PreconditionError("the defining ideal is the unit ideal")
        self._dim: Optional[int] = None

    @classmethod
    def polynomial(
        cls,
        variables: Sequence[str],
        prime: Optional[int] = None,
        order: Optional[MonomialOrder] = None,
    ) -> "QuotientRing":
        return cls(PolyRing(variables, order, prime))

    @classmethod
    def from_text(
        cls,
        variables: Sequence[str],
        relations: Sequence[str],
        prime: Optional[int] = None,
    ) -> "QuotientRing":
        ring = PolyRing(variables, prime=prime)
        return cls(ring, [ring.parse(text) for text in relations])

    @property
    def characteristic(self) -> int:
        return self.ring.prime

    @property
    def variables(self) -> tuple:
        return self.ring.variables

    def __call__(self, text: str) -> Polynomial:
        """Parse an element of the ambient ring."""
        return self.ring.parse(text)

    def gen(self, name: str) -> Polynomial:
        return self.ring.gen(name)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return self.J.reduce(f)

    def is_zero(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def ideal(self, gens: Sequence[Polynomial]) -> IdealHandle:
        """Preimage in the ambient ring of the ideal (gens)R, i.e. (gens) + J."""
        return IdealHandle(self.ring, list(gens) + list(self.J.generators))

    def contains(self, gens: Sequence[Polynomial], f: Polynomial) -> bool:
        """True iff f ∈ (gens)R."""
        return self.ideal(gens).contains(f)

    def dimension(self) -> int:
        if self._dim is None:
            self._dim = dimension(self.J)
        return self._dim

    def __repr__(self) -> str:
        rels = ", ".join(str(g) for g in self.J.generators) or "0"
        return f"QuotientRing(F_{self.ring.prime}[{', '.join(self.ring.variables)}]/({rels}))"


# ---------------------------------------------------------------------------
# Element and ideal tests
# ---------------------------------------------------------------------------

def normal_form_mod(R: QuotientRing, f: Polynomial) -> Polynomial:
    """Canonical representative of f modulo J; zero iff f ∈ J."""
    return R.normal_form(f)


def is_regular(R: QuotientRing, f: Polynomial) -> bool:
    """True iff f is a nonzerodivisor on R, i.e. J : f = J.

    Raises:
        PreconditionError: if f is zero in R.
    """
    if R.is_zero(f):
        raise PreconditionError(f"{f} is zero in R")
    if R.J.is_zero():
        return True
    return ideals_equal(colon_ideal(R.J, f), R.J)


def is_system_of_parameters(R: QuotientRing, elems: Sequence[Polynomial]) -> bool:
    """True iff there are dim R elements and they cut R down to dimension 0."""
    if len(elems) != R.dimension():
        return False
    return dimension(R.ideal(elems)) == 0


def colon_in_quotient(
    R: QuotientRing,
    I: Sequence[Polynomial],
    K: Sequence[Polynomial],
) -> List[Polynomial]:
    """Generators of (IR :_R KR), reduced modulo J.

    Computed in the ambient ring as (I + J) : (K + J), the intersection of
    the colons by each generator of K.
    """
    lifted = R.ideal(I)
    divisors = [R.normal_form(k) for k in K]
    divisors = [k for k in divisors if not k.is_zero()]
    if not divisors:
        return [R.ring.one]
    result: Optional[IdealHandle] = None
    for k in divisors:
        piece = colon_ideal(lifted, k)
        result = piece if result is None else intersect(result, piece)
    reduced = [R.normal_form(g) for g in result.generators]
    return [g for g in reduced if not g.is_zero()]


# ---------------------------------------------------------------------------
# Frobenius
# ---------------------------------------------------------------------------

def frobenius_power(gens: Sequence[Polynomial], p: int) -> List[Polynomial]:
    """Generators of the bracket power I^[p]."""
    return [g ** p for g in gens]


def _in_maximal_bracket(f: Polynomial, p: int) -> bool:
    """f ∈ (x_1^p, ..., x_n^p): every term has some exponent ≥ p."""
    return all(any(e >= p for e in m) for m, _ in f.items())


def fedder_fpure(J: IdealHandle, p: Optional[int] = None) -> bool:
    """Decide F-purity of S/J by checking J^[p] : J ⊄ n^[p].

    Args:
        J: Defining ideal in a polynomial ring of characteristic p.
        p: Characteristic; must match the ring when given.

    Returns:
        True iff S/J is F-pure.
    """
    ring = J.ring
    p = ring.prime if p is None else p
    if p != ring.prime:
        raise PreconditionError(f"p={p} differs from the ring characteristic {ring.prime}")
    if J.is_zero():
        return True
    if J.is_unit():
        raise PreconditionError("the unit ideal defines the zero ring")
    bracket = IdealHandle(ring, frobenius_power(J.generators, p))
    colon: Optional[IdealHandle] = None
    for g in J.generators:
        piece = colon_ideal(bracket, g)
        colon = piece if colon is None else intersect(colon, piece)
    verdict = any(not _in_maximal_bracket(h, p) for h in colon.generators)
    logger.info("Fedder: J=%s p=%d -> %s", J, p, "F-pure" if verdict else "not F-pure")
    return verdict


def _monomials_up_to(ring: PolyRing, max_degree: int) -> List[Polynomial]:
    out = []
    for degree in range(0, max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(ring.nvars), degree):
            exps = [0] * ring.nvars
            for i in combo:
                exps[i] += 1
            out.append(ring.monomial(tuple(exps)))
    return out


@dataclass
class FrobeniusViolation:
    """An element f with f^p ∈ I^[p] + J but f ∉ I + J."""

    ideal: List[str]
    element: str

    def to_dict(self) -> Dict[str, object]:
        return {"ideal": self.ideal, "element": self.element}


def frobenius_closure_violations(
    J: IdealHandle,
    test_ideals: Sequence[Sequence[Polynomial]],
    samples: int = 200,
    seed: int = 0,
    max_degree: int = 2,
) -> List[FrobeniusViolation]:
    """Sample elements of R = S/J that break Frobenius closure of a test ideal.

    Every monomial of degree ≤ max_degree is tried first, then seeded
    random combinations of them, `samples` candidates per test ideal.
    An empty result is consistent with R being F-pure.
    """
    ring = J.ring
    p = ring.prime
    rng = random.Random(seed)
    monomials = _monomials_up_to(ring, max_degree)
    violations: List[FrobeniusViolation] = []
    for gens in test_ideals:
        plain = IdealHandle(ring, list(gens) + list(J.generators))
        bracket = IdealHandle(ring, frobenius_power(gens, p) + list(J.generators))
        candidates = list(monomials[:samples])
        while len(candidates) < samples:
            size = rng.randint(1, min(4, len(monomials)))
            picks = rng.sample(monomials, size)
            f = ring.zero
            for m in picks:
                f = f + m.scale(rng.randrange(1, p))
            candidates.append(f)
        for f in candidates:
            if f.is_zero():
                continue
            if bracket.contains(f ** p) and not plain.contains(f):
                violations.append(FrobeniusViolation([str(g) for g in gens], str(f)))
                break
    logger.info("Frobenius sampling: %d test ideals, %d violations", len(test_ideals), len(violations))
    return violations
