"""
Rees-algebra presentations and relation type.

For R = k[x]/J and I = (g_1, ..., g_n) the presentation ideal Q is the
kernel of R[T_1, ..., T_n] → R[t], T_i ↦ g_i·t. It is computed by
eliminating t from J + (T_i − t·g_i) and then re-based under an order
that compares T-degree first, so that the basis elements of T-degree
≤ k generate the truncation Q_k.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.algebra.groebner import IdealHandle, buchberger, eliminate, lift, reduce
from src.algebra.polyring import MonomialOrder, Polynomial, PolyRing, poly_substitute
from src.algebra.quotient import QuotientRing, is_regular
from src.utilis.errors import PreconditionError
from src.utilis.logger import logger

T_PREFIX = "T"
RATE_VARIABLE = "_t"


# ---------------------------------------------------------------------------
# Presentation rings and T-graded polynomials
# ---------------------------------------------------------------------------

def t_names(n: int) -> List[str]:
    return [f"{T_PREFIX}{i}" for i in range(1, n + 1)]


def rees_polynomial_ring(base: PolyRing, n: int) -> PolyRing:
    """base[T_1..T_n] ordered by T-degree first, grevlex after.

    Raises:
        PreconditionError: if the base ring already uses a T-name.
    """
    names = t_names(n)
    clash = set(names) & set(base.variables)
    if clash:
        raise PreconditionError(f"base ring variables clash with {sorted(clash)}")
    weights = [0] * base.nvars + [1] * n
    return PolyRing(base.variables + tuple(names), MonomialOrder.weighted(weights), base.prime)


def _t_degrees(f: Polynomial, n: int) -> set:
    return {sum(m[-n:]) if n else 0 for m, _ in f.items()}


@dataclass(frozen=True)
class RelationPoly:
    """A polynomial homogeneous in the T-variables (the last `ntvars` of its ring)."""

    poly: Polynomial
    degree: int
    ntvars: int

    @classmethod
    def of(cls, poly: Polynomial, ntvars: int) -> "RelationPoly":
        """Wrap `poly`, checking T-homogeneity.

        Raises:
            PreconditionError: if `poly` mixes T-degrees.
        """
        degrees = _t_degrees(poly, ntvars)
        if len(degrees) > 1:
            raise PreconditionError(f"{poly} is not homogeneous in the T-variables")
        return cls(poly, degrees.pop() if degrees else 0, ntvars)

    @property
    def ring(self) -> PolyRing:
        return self.poly.ring

    def __str__(self) -> str:
        return str(self.poly)


@dataclass
class ReesPresentation:
    """Presentation ideal Q of R[It] with its T-degree-compatible basis."""

    base: QuotientRing
    gens: Tuple[Polynomial, ...]
    ring: PolyRing
    basis: Tuple[Polynomial, ...]
    relations: Tuple[RelationPoly, ...]
    elapsed: float = 0.0
    _truncations: Dict[int, IdealHandle] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return len(self.gens)

    def T(self, i: int) -> Polynomial:
        """The variable T_i, 1-based."""
        return self.ring.gen(f"{T_PREFIX}{i}")

    def degrees(self) -> List[int]:
        return [r.degree for r in self.relations]

    def relation(self, poly: Polynomial) -> RelationPoly:
        return RelationPoly.of(self.ring.convert(poly), self.n)

    def truncation(self, degree: int) -> IdealHandle:
        """Ideal generated by J and the basis elements of T-degree ≤ degree."""
        if degree not in self._truncations:
            gens = [
                g for g in self.basis
                if max(_t_degrees(g, self.n), default=0) <= degree
            ]
            self._truncations[degree] = IdealHandle(self.ring, gens)
        return self._truncations[degree]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "gens": [str(g) for g in self.gens],
            "relations": [{"poly": str(r), "degree": r.degree} for r in self.relations],
        }


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def rees_presentation(R: QuotientRing, gens: Sequence[Polynomial]) -> ReesPresentation:
    """Compute the presentation ideal of the Rees algebra of (gens)R.

    Args:
        R: Base ring.
        gens: Ideal generators, nonzero in R.

    Returns:
        ReesPresentation with relations sorted by T-degree.

    Raises:
        PreconditionError: if a generator is zero in R.
        DegreeCapExceeded: if the elimination runs past the degree cap.
    """
    gens = tuple(R.ring.convert(g) for g in gens)
    if not gens:
        raise PreconditionError("the ideal needs at least one generator")
    for g in gens:
        if R.is_zero(g):
            raise PreconditionError(f"generator {g} is zero in R")
    if not all(g.is_homogeneous() for g in gens) or not all(
        h.is_homogeneous() for h in R.J.generators
    ):
        logger.warning("Inhomogeneous input: relation type is computed for the graded ring only")

    started = time.perf_counter()
    n = len(gens)
    P = rees_polynomial_ring(R.ring, n)
    ambient = P.extend([RATE_VARIABLE], MonomialOrder.grevlex())
    t = ambient.gen(RATE_VARIABLE)
    system = [ambient.convert(h) for h in R.J.generators]
    system += [ambient.gen(name) - t * ambient.convert(g) for name, g in zip(t_names(n), gens)]

    kernel = eliminate(IdealHandle(ambient, system), [RATE_VARIABLE])
    basis = tuple(buchberger([P.convert(g) for g in kernel.generators])) if kernel.generators else ()
    relations = sorted(
        (RelationPoly.of(g, n) for g in basis if max(_t_degrees(g, n)) > 0),
        key=lambda r: (r.degree, P.key(r.poly.lm)),
    )
    elapsed = time.perf_counter() - started
    logger.info(
        "Rees presentation of %d generators: %d relations, degrees %s, %.2fs",
        n, len(relations), sorted({r.degree for r in relations}), elapsed,
    )
    return ReesPresentation(R, gens, P, basis, tuple(relations), elapsed)


def relation_type(P: ReesPresentation) -> int:
    """Least k with Q_k = Q; 1 when Q has no relations of positive degree."""
    if not P.relations:
        return 1
    for degree in sorted({r.degree for r in P.relations}, reverse=True):
        lower = P.truncation(degree - 1)
        for r in P.relations:
            if r.degree == degree and not lower.contains(r.poly):
                logger.info("relation type %d witnessed by %s", degree, r)
                return max(degree, 1)
    return 1


def koszul_relations(gens: Sequence[Polynomial], ring: Optional[PolyRing] = None) -> List[RelationPoly]:
    """The relations g_j·T_i − g_i·T_j, i < j."""
    if len(gens) < 2:
        return []
    n = len(gens)
    ring = ring or rees_polynomial_ring(gens[0].ring, n)
    lifted = [ring.convert(g) for g in gens]
    T = [ring.gen(name) for name in t_names(n)]
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            out.append(RelationPoly.of(lifted[j] * T[i] - lifted[i] * T[j], n))
    return out


def _as_relation(F: Any, n: int) -> RelationPoly:
    if isinstance(F, RelationPoly):
        return F
    return RelationPoly.of(F, n)


def evaluate_relation(R: QuotientRing, F: RelationPoly, gens: Sequence[Polynomial]) -> Polynomial:
    """F(g_1, ..., g_n) reduced modulo J."""
    names = t_names(len(gens))
    assignment = {v: R.ring.gen(v) for v in R.ring.variables}
    assignment.update({name: R.ring.convert(g) for name, g in zip(names, gens)})
    return R.normal_form(poly_substitute(F.poly, assignment, R.ring))


def is_relation(R: QuotientRing, F: Any, gens: Sequence[Polynomial]) -> bool:
    """True iff F(g_1, ..., g_n) = 0 in R.

    Raises:
        PreconditionError: if F is not homogeneous in the T-variables.
    """
    F = _as_relation(F, len(gens))
    return evaluate_relation(R, F, gens).is_zero()


def reducible_to_lower_degree(P: ReesPresentation, F: Any) -> bool:
    """True iff F lies in J plus the relations of T-degree below deg F.

    Raises:
        PreconditionError: if F is not a relation on the generators.
    """
    F = _as_relation(P.ring.convert(F.poly if isinstance(F, RelationPoly) else F), P.n)
    if not is_relation(P.base, F, P.gens):
        raise PreconditionError(f"{F} is not a relation on the generators")
    return P.truncation(F.degree - 1).contains(F.poly)


# ---------------------------------------------------------------------------
# The non-Cohen-Macaulay family
# ---------------------------------------------------------------------------

def example21_ring(m: int = 2, prime: Optional[int] = None) -> QuotientRing:
    """k[x, y, z, w]/(w², wz) for m = 2, k[x1..xm, z, w]/(w², wz) for m ≥ 3."""
    if m < 2:
        raise PreconditionError("the family needs m >= 2")
    names = ["x", "y"] if m == 2 else [f"x{i}" for i in range(1, m + 1)]
    ring = PolyRing(names + ["z", "w"], prime=prime)
    w, z = ring.gen("w"), ring.gen("z")
    return QuotientRing(ring, [w * w, w * z])


def example21_ideal(R: QuotientRing, n: int) -> List[Polynomial]:
    """(x1^{n-1}·x2 + z^n, x1^n, x2^n, x3, ..., xm) in a ring from `example21_ring`."""
    if n < 1:
        raise PreconditionError("n must be positive")
    ring = R.ring
    params = [v for v in ring.variables if v not in ("z", "w")]
    x1, x2 = ring.gen(params[0]), ring.gen(params[1])
    z = ring.gen("z")
    gens = [x1 ** (n - 1) * x2 + z ** n, x1 ** n, x2 ** n]
    gens += [ring.gen(v) for v in params[2:]]
    return gens


def example21_relation(P: ReesPresentation, n: int) -> RelationPoly:
    """w·T1^n − w·T2^{n−1}·T3."""
    w = P.ring.gen("w")
    return P.relation(w * P.T(1) ** n - w * P.T(2) ** (n - 1) * P.T(3))


# ---------------------------------------------------------------------------
# Two-parameter descent
# ---------------------------------------------------------------------------

@dataclass
class DescentResult:
    """Outcome of one descent step on a relation F of degree N."""

    status: str  # "ok" | "pass_through" | "not_multiplier" | "no_split"
    N: int
    p: Optional[int] = None
    G: Optional[RelationPoly] = None
    H: Optional[RelationPoly] = None
    s: List[Polynomial] = field(default_factory=list)
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status in ("ok", "pass_through")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status,
            "N": self.N,
            "p": self.p,
            "G": str(self.G) if self.G is not None else None,
            "G_degree": self.G.degree if self.G is not None else None,
            "H": str(self.H) if self.H is not None else None,
            "s": [str(v) for v in self.s],
            "message": self.message,
        }


def _coefficient_of(F: Polynomial, t1_exp: int, base: PolyRing) -> Polynomial:
    """Coefficient in base of T1^t1_exp·T2^(deg − t1_exp) in a binary form."""
    terms = {}
    for m, c in F.items():
        if m[-2] == t1_exp:
            terms[m[:-2]] = c
    return Polynomial(base, terms)


def two_param_descent(
    R: QuotientRing,
    gens2: Sequence[Polynomial],
    F: Any,
    gamma: Polynomial,
) -> DescentResult:
    """Rewrite a relation on (x, y) through a lower-degree relation.

    With P_j = Σ_{i<j} r_{N−i} x^{j−1−i} y^i, each γ·P_j is a multiple s_j·y^j.
    For the first p with s_{p+1} = a·γ + Σ b_j·s_j the relation

        G = Σ_{i≤p} r_{N−i} T1^{p−i} T2^i − a·y·T2^p − Σ_j b_j·T2^{p+1−j}·P_j(T1, T2)

    has degree p < N and leading coefficient r_N, and F = T1^{N−p}·G + T2·H.

    Raises:
        PreconditionError: if F is not a relation, r_N = 0, or γ is a zerodivisor.
    """
    if len(gens2) != 2:
        raise PreconditionError("descent works on a pair of parameters")
    ring = R.ring
    x, y = (ring.convert(g) for g in gens2)
    F = _as_relation(F, 2)
    Pring = F.ring
    if Pring.variables[:-2] != ring.variables:
        raise PreconditionError("F must live in R[T1, T2]")
    if not is_relation(R, F, (x, y)):
        raise PreconditionError(f"{F} is not a relation on ({x}, {y})")
    N = F.degree
    r = {k: R.normal_form(_coefficient_of(F.poly, k, ring)) for k in range(N + 1)}
    if r[N].is_zero():
        raise PreconditionError("leading coefficient r_N is zero; factor out T2 first")
    gamma = ring.convert(gamma)
    if R.is_zero(gamma) or not is_regular(R, gamma):
        raise PreconditionError(f"gamma = {gamma} is a zerodivisor")

    if N <= 1:
        logger.info("descent: degree %d relation passes through unchanged", N)
        return DescentResult("pass_through", N, p=N, G=F)

    J = list(R.J.generators)
    T1, T2 = Pring.gen(f"{T_PREFIX}1"), Pring.gen(f"{T_PREFIX}2")

    def partial_sum(j: int, a: Polynomial, b: Polynomial) -> Polynomial:
        total = a.ring.zero
        for i in range(j):
            total = total + a.ring.convert(r[N - i]) * a ** (j - 1 - i) * b ** i
        return total

    s: List[Polynomial] = []
    for j in range(1, N + 1):
        target = gamma * partial_sum(j, x, y)
        cofactors = lift(target, [y ** j] + J)
        if cofactors is None:
            msg = f"gamma*P_{j} is not in (y^{j}); gamma does not act as a multiplier"
            logger.warning("descent: %s", msg)
            return DescentResult("not_multiplier", N, s=s, message=msg)
        s.append(R.normal_form(cofactors[0]))
        p = j - 1
        if p < 1:
            continue
        combo = lift(s[p], [gamma] + s[:p] + J)
        if combo is None:
            continue
        a, b = combo[0], combo[1:p + 1]
        G = partial_sum(p + 1, T1, T2)
        G = G - Pring.convert(a * y) * T2 ** p
        for jj in range(1, p + 1):
            G = G - Pring.convert(b[jj - 1]) * T2 ** (p + 1 - jj) * partial_sum(jj, T1, T2)
        G = _reduce_coefficients(R, Pring, G)
        G_rel = RelationPoly.of(G, 2)
        rest = _reduce_coefficients(R, Pring, F.poly) - T1 ** (N - p) * G
        H = _divide_by_t2(rest, Pring)
        H = _reduce_coefficients(R, Pring, H)
        H_rel = RelationPoly.of(H, 2) if not H.is_zero() else RelationPoly(H, N - 1, 2)
        logger.info("descent: N=%d -> p=%d, G=%s", N, p, G)
        return DescentResult("ok", N, p=p, G=G_rel, H=H_rel, s=s)

    msg = f"no p < {N} with s_(p+1) in (gamma, s_1, ..., s_p)"
    logger.warning("descent: %s", msg)
    return DescentResult("no_split", N, s=s, message=msg)


def _reduce_coefficients(R: QuotientRing, Pring: PolyRing, f: Polynomial) -> Polynomial:
    """Reduce the base-ring coefficients of f modulo J."""
    basis = [Pring.convert(g) for g in R.J.gb()]
    if not basis:
        return f
    return reduce(f, basis)


def _divide_by_t2(f: Polynomial, Pring: PolyRing) -> Polynomial:
    terms = {}
    for m, c in f.items():
        if m[-1] == 0:
            raise PreconditionError("F − T1^(N−p)·G is not divisible by T2")
        terms[m[:-1] + (m[-1] - 1,)] = c
    return Polynomial(Pring, terms)
