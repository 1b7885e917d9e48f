"""
Buchberger engine and the ideal operations built on it.

The pair bookkeeping is the Gebauer–Möller update (coprime leading
monomials and the chain criterion), pairs are processed by the normal
strategy (smallest lcm first) and every run is guarded by the configured
degree cap.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.algebra.polyring import (
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
)
from src.utilis.config import degree_cap
from src.utilis.errors import DegreeCapExceeded, PreconditionError
from src.utilis.logger import logger

AUX = "_aux"


# ---------------------------------------------------------------------------
# Core reduction
# ---------------------------------------------------------------------------

@dataclass
class _Element:
    """A monic basis element, optionally carrying its cofactors over the input."""

    lm: Monomial
    terms: Dict[Monomial, int]
    rep: Optional[List[Polynomial]] = None


def _mul_add(target: Dict[Monomial, int], source: Dict[Monomial, int], coef: int, shift: Monomial, p: int) -> None:
    """target += coef * shift * source, in place."""
    for m, c in source.items():
        nm = tuple(a + b for a, b in zip(m, shift))
        v = (target.get(nm, 0) + coef * c) % p
        if v:
            target[nm] = v
        else:
            target.pop(nm, None)


def _reduce_terms(
    ring: PolyRing,
    terms: Dict[Monomial, int],
    basis: Sequence[_Element],
    rep: Optional[List[Polynomial]] = None,
) -> Tuple[Dict[Monomial, int], Optional[List[Polynomial]]]:
    """Divide `terms` by the monic `basis`.

    When `rep` is given it is updated so that remainder − rep·inputs stays
    constant, which is what `lift` and the tracked Buchberger rely on.
    """
    p = ring.prime
    key = ring.key
    current = dict(terms)
    remainder: Dict[Monomial, int] = {}
    while current:
        m = max(current, key=key)
        c = current[m]
        for g in basis:
            if mono_divides(g.lm, m):
                q = mono_div(m, g.lm)
                _mul_add(current, g.terms, -c, q, p)
                if rep is not None and g.rep is not None:
                    shift = ring.monomial(q, -c)
                    rep = [r + shift * gr for r, gr in zip(rep, g.rep)]
                break
        else:
            remainder[m] = c
            del current[m]
    return remainder, rep


def _monic_element(ring: PolyRing, terms: Dict[Monomial, int], rep: Optional[List[Polynomial]]) -> _Element:
    lm = max(terms, key=ring.key)
    inv = ring.field.inv(terms[lm])
    p = ring.prime
    scaled = {m: c * inv % p for m, c in terms.items()}
    if rep is not None:
        rep = [r.scale(inv) for r in rep]
    return _Element(lm, scaled, rep)


def reduce(f: Polynomial, basis: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> Polynomial:
    """Remainder of `f` on full division by `basis`.

    Args:
        f: Dividend.
        basis: Nonzero divisors in the same ring.
        order: Monomial order to divide under; defaults to the ring's.

    Returns:
        A remainder with no term divisible by a leading monomial of `basis`.
    """
    ring = f.ring if order is None else f.ring.with_order(order)
    elements = []
    for g in basis:
        g = ring.convert(g)
        if g.is_zero():
            raise PreconditionError("cannot divide by the zero polynomial")
        elements.append(_monic_element(ring, g.as_dict(), None))
    remainder, _ = _reduce_terms(ring, ring.convert(f).as_dict(), elements)
    return f.ring.convert(Polynomial(ring, remainder))


def divide_exact(g: Polynomial, f: Polynomial) -> Polynomial:
    """Return h with g = f·h.

    Raises:
        PreconditionError: if f is zero or does not divide g.
    """
    if f.is_zero():
        raise PreconditionError("division by zero polynomial")
    ring = g.ring
    p = ring.prime
    lm, inv = f.lm, ring.field.inv(f.lc)
    current = g.as_dict()
    quotient: Dict[Monomial, int] = {}
    while current:
        m = max(current, key=ring.key)
        if not mono_divides(lm, m):
            raise PreconditionError(f"{f} does not divide {g}")
        q = mono_div(m, lm)
        c = current[m] * inv % p
        quotient[q] = c
        _mul_add(current, f.as_dict(), -c, q, p)
    return Polynomial(ring, quotient)


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def _update(
    elements: List[_Element],
    basis: Set[int],
    pairs: Set[Tuple[int, int]],
    h: int,
) -> Tuple[Set[int], Set[Tuple[int, int]]]:
    """Gebauer–Möller installation of element `h`."""
    lm_h = elements[h].lm

    candidates = set(basis)
    kept: Set[int] = set()
    while candidates:
        g = candidates.pop()
        lcm = mono_lcm(lm_h, elements[g].lm)

        def dominated(other: int) -> bool:
            return mono_divides(mono_lcm(lm_h, elements[other].lm), lcm)

        if mono_coprime(lm_h, elements[g].lm) or (
            not any(dominated(o) for o in candidates) and not any(dominated(o) for o in kept)
        ):
            kept.add(g)

    new_pairs = {(h, g) for g in kept if not mono_coprime(lm_h, elements[g].lm)}

    survivors: Set[Tuple[int, int]] = set()
    for g1, g2 in pairs:
        lcm = mono_lcm(elements[g1].lm, elements[g2].lm)
        if (
            not mono_divides(lm_h, lcm)
            or mono_lcm(elements[g1].lm, lm_h) == lcm
            or mono_lcm(elements[g2].lm, lm_h) == lcm
        ):
            survivors.add((g1, g2))
    survivors |= new_pairs

    new_basis = {g for g in basis if not mono_divides(lm_h, elements[g].lm)}
    new_basis.add(h)
    return new_basis, survivors


def _spair(ring: PolyRing, a: _Element, b: _Element) -> Tuple[Dict[Monomial, int], Optional[List[Polynomial]]]:
    lcm = mono_lcm(a.lm, b.lm)
    qa, qb = mono_div(lcm, a.lm), mono_div(lcm, b.lm)
    terms: Dict[Monomial, int] = {}
    _mul_add(terms, a.terms, 1, qa, ring.prime)
    _mul_add(terms, b.terms, -1, qb, ring.prime)
    rep = None
    if a.rep is not None and b.rep is not None:
        ma, mb = ring.monomial(qa), ring.monomial(qb)
        rep = [ma * ra - mb * rb for ra, rb in zip(a.rep, b.rep)]
    return terms, rep


def _groebner_elements(ring: PolyRing, gens: Sequence[Polynomial], track: bool) -> List[_Element]:
    """Minimal (not yet interreduced) Gröbner basis as elements."""
    cap = degree_cap()
    elements: List[_Element] = []
    basis: Set[int] = set()
    pairs: Set[Tuple[int, int]] = set()
    k = len(gens)

    def install(terms: Dict[Monomial, int], rep: Optional[List[Polynomial]]) -> None:
        nonlocal basis, pairs
        remainder, rep = _reduce_terms(ring, terms, [elements[i] for i in sorted(basis)], rep)
        if not remainder:
            return
        elements.append(_monic_element(ring, remainder, rep))
        basis, pairs = _update(elements, basis, pairs, len(elements) - 1)

    order = sorted(
        (i for i in range(k) if not gens[i].is_zero()),
        key=lambda i: ring.key(gens[i].lm),
    )
    for i in order:
        rep = None
        if track:
            rep = [ring.one if j == i else ring.zero for j in range(k)]
        install(gens[i].as_dict(), rep)

    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (
                sum(mono_lcm(elements[ij[0]].lm, elements[ij[1]].lm)),
                ring.key(mono_lcm(elements[ij[0]].lm, elements[ij[1]].lm)),
                ij,
            ),
        )
        pairs.discard((i, j))
        lcm_degree = sum(mono_lcm(elements[i].lm, elements[j].lm))
        if lcm_degree > cap:
            raise DegreeCapExceeded(lcm_degree, cap)
        terms, rep = _spair(ring, elements[i], elements[j])
        install(terms, rep)

    return [elements[i] for i in sorted(basis, key=lambda i: ring.key(elements[i].lm), reverse=True)]


def buchberger(gens: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> List[Polynomial]:
    """Reduced Gröbner basis of the ideal generated by `gens`.

    Args:
        gens: Generators, all in one ring.
        order: Order to compute under; defaults to the ring's own.

    Returns:
        Monic, interreduced basis sorted by descending leading monomial,
        in the ring carrying `order`.

    Raises:
        DegreeCapExceeded: if an S-pair exceeds the degree cap.
    """
    if not gens:
        return []
    ring = gens[0].ring if order is None else gens[0].ring.with_order(order)
    gens = [ring.convert(g) for g in gens]
    started = time.perf_counter()
    minimal = _groebner_elements(ring, gens, track=False)

    reduced: List[Polynomial] = []
    for idx, element in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = {m: c for m, c in element.terms.items() if m != element.lm}
        tail_rem, _ = _reduce_terms(ring, tail, others)
        tail_rem[element.lm] = 1
        reduced.append(Polynomial(ring, tail_rem))

    logger.debug(
        "Buchberger: %d generators -> %d basis elements in %.3fs (%s)",
        len(gens), len(reduced), time.perf_counter() - started, ring.order,
    )
    return reduced


def lift(f: Polynomial, gens: Sequence[Polynomial]) -> Optional[List[Polynomial]]:
    """Cofactors c with f = Σ c_i·gens_i, or None when f is not in the ideal."""
    ring = f.ring
    gens = [ring.convert(g) for g in gens]
    if f.is_zero():
        return [ring.zero for _ in gens]
    if not gens:
        return None
    elements = _groebner_elements(ring, gens, track=True)
    remainder, rep = _reduce_terms(ring, f.as_dict(), elements, [ring.zero for _ in gens])
    if remainder:
        return None
    return [-r for r in rep]


# ---------------------------------------------------------------------------
# Ideals
# ---------------------------------------------------------------------------

class IdealHandle:
    """An ideal of a polynomial ring with a lazily computed reduced basis."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial]) -> None:
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(
            g for g in (ring.convert(h) for h in generators) if not g.is_zero()
        )
        self._gb: Optional[Tuple[Polynomial, ...]] = None

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def gb(self) -> Tuple[Polynomial, ...]:
        if self._gb is None:
            self._gb = tuple(buchberger(list(self.generators))) if self.generators else ()
        return self._gb

    def reduce(self, f: Polynomial) -> Polynomial:
        basis = self.gb()
        if not basis:
            return self.ring.convert(f)
        return reduce(self.ring.convert(f), basis)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    __contains__ = contains

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.gb())

    def is_zero(self) -> bool:
        return not self.generators

    def leading_monomials(self) -> List[Monomial]:
        return [g.lm for g in self.gb()]

    def __add__(self, other: "IdealHandle") -> "IdealHandle":
        return ideal_sum(self, other)

    def __mul__(self, other: "IdealHandle") -> "IdealHandle":
        return ideal_product(self, other)

    def __repr__(self) -> str:
        return f"IdealHandle({', '.join(str(g) for g in self.generators) or '0'})"


def _same_ring(I: IdealHandle, J: IdealHandle) -> None:
    if I.ring.variables != J.ring.variables or I.ring.prime != J.ring.prime:
        raise PreconditionError(f"ideals live in different rings: {I.ring!r} vs {J.ring!r}")


def _restricted_order(ring: PolyRing, keep: Sequence[int]) -> MonomialOrder:
    if ring.order.kind == "weighted":
        return MonomialOrder.weighted([ring.order.weights[i] for i in keep])
    if ring.order.kind == "lex":
        return ring.order
    return MonomialOrder.grevlex()


def ideal_member(f: Polynomial, I: IdealHandle) -> bool:
    """True iff `f` reduces to zero modulo the reduced basis of `I`."""
    return I.contains(f)


def ideal_sum(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    _same_ring(I, J)
    return IdealHandle(I.ring, I.generators + J.generators)


def ideal_product(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    _same_ring(I, J)
    return IdealHandle(I.ring, [a * J.ring.convert(b) for a in I.generators for b in J.generators])


def ideal_power(I: IdealHandle, n: int) -> IdealHandle:
    """I^n; I^0 is the unit ideal."""
    if n < 0:
        raise PreconditionError("ideal powers need n >= 0")
    if n == 0:
        return IdealHandle(I.ring, [I.ring.one])
    products = []
    for combo in itertools.combinations_with_replacement(I.generators, n):
        product = I.ring.one
        for g in combo:
            product = product * g
        products.append(product)
    return IdealHandle(I.ring, products)


def is_subideal(I: IdealHandle, J: IdealHandle) -> bool:
    """True iff I ⊆ J."""
    _same_ring(I, J)
    return all(J.contains(g) for g in I.generators)


def ideals_equal(I: IdealHandle, J: IdealHandle) -> bool:
    return is_subideal(I, J) and is_subideal(J, I)


def eliminate(I: IdealHandle, front_vars: Sequence[str]) -> IdealHandle:
    """I ∩ k[remaining variables] via a block elimination order.

    Args:
        I: Ideal of a ring containing every name in `front_vars`.
        front_vars: Variables to eliminate.

    Returns:
        Ideal of the subring on the remaining variables (original order of
        names), generated by the basis elements free of `front_vars`.
    """
    ring = I.ring
    front = [v for v in ring.variables if v in set(front_vars)]
    missing = set(front_vars) - set(front)
    if missing:
        raise PreconditionError(f"cannot eliminate unknown variables {sorted(missing)}")
    keep_idx = [i for i, v in enumerate(ring.variables) if v not in set(front)]
    rest = [ring.variables[i] for i in keep_idx]
    subring = PolyRing(rest, _restricted_order(ring, keep_idx), ring.prime)
    if not front:
        return IdealHandle(subring, I.generators)

    elim_ring = PolyRing(front + rest, MonomialOrder.block_elimination(len(front)), ring.prime)
    basis = buchberger([elim_ring.convert(g) for g in I.generators]) if I.generators else []
    nfront = len(front)
    survivors = [g for g in basis if all(not any(m[:nfront]) for m in g.as_dict())]
    logger.debug("eliminate %s: %d of %d basis elements survive", front, len(survivors), len(basis))
    return IdealHandle(subring, [_drop_front(g, subring, nfront) for g in survivors])


def _drop_front(g: Polynomial, subring: PolyRing, nfront: int) -> Polynomial:
    return Polynomial(subring, {m[nfront:]: c for m, c in g.items()})


def _with_aux(ring: PolyRing) -> Tuple[PolyRing, Polynomial]:
    aux_ring = ring.extend([AUX])
    return aux_ring, aux_ring.gen(AUX)


def _back(I: IdealHandle, ring: PolyRing) -> IdealHandle:
    return IdealHandle(ring, [ring.convert(g) for g in I.generators])


def intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """I ∩ J by eliminating s from s·I + (1 − s)·J."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return IdealHandle(ring, [])
    aux_ring, s = _with_aux(ring)
    gens = [s * aux_ring.convert(g) for g in I.generators]
    gens += [(1 - s) * aux_ring.convert(h) for h in J.generators]
    return _back(eliminate(IdealHandle(aux_ring, gens), [AUX]), ring)


def colon_ideal(I: IdealHandle, f: Polynomial) -> IdealHandle:
    """I : f = {g : g·f ∈ I}, from the generators of I ∩ (f) divided by f.

    Raises:
        PreconditionError: if f is zero.
    """
    f = I.ring.convert(f)
    if f.is_zero():
        raise PreconditionError("colon by the zero polynomial")
    meet = intersect(I, IdealHandle(I.ring, [f]))
    return IdealHandle(I.ring, [divide_exact(g, f) for g in meet.generators])


def saturate(I: IdealHandle, f: Polynomial) -> IdealHandle:
    """I : f^∞, by eliminating s from I + (1 − s·f)."""
    f = I.ring.convert(f)
    if f.is_zero():
        raise PreconditionError("saturation by the zero polynomial")
    aux_ring, s = _with_aux(I.ring)
    gens = [aux_ring.convert(g) for g in I.generators] + [1 - s * aux_ring.convert(f)]
    return _back(eliminate(IdealHandle(aux_ring, gens), [AUX]), I.ring)


def radical_member(f: Polynomial, I: IdealHandle) -> bool:
    """True iff f ∈ √I, i.e. 1 ∈ I + (1 − s·f)."""
    f = I.ring.convert(f)
    if f.is_zero():
        return True
    aux_ring, s = _with_aux(I.ring)
    gens = [aux_ring.convert(g) for g in I.generators] + [1 - s * aux_ring.convert(f)]
    return IdealHandle(aux_ring, gens).is_unit()


def dimension(I: IdealHandle) -> int:
    """Krull dimension of k[x]/I; -1 for the unit ideal.

    The largest variable set containing the support of no leading
    monomial of the reduced basis.
    """
    if I.is_unit():
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in I.leading_monomials()]
    n = I.ring.nvars
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def height(I: IdealHandle) -> int:
    """Codimension nvars − dim; the unit ideal reports nvars + 1."""
    d = dimension(I)
    n = I.ring.nvars
    return n + 1 if d < 0 else n - d
