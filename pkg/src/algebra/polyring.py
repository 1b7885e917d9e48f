"""
Exact multivariate polynomials over a prime field.

Monomials are dense exponent tuples; a `PolyRing` fixes the variable names,
the monomial order and the characteristic; a `Polynomial` is an immutable
map from monomials to nonzero residues owned by one ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import isprime

from src.utilis.config import default_prime
from src.utilis.errors import PreconditionError

Monomial = Tuple[int, ...]

MAX_EXPONENT = 10_000


# ---------------------------------------------------------------------------
# Monomial helpers
# ---------------------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    result = tuple(x + y for x, y in zip(a, b))
    if result and max(result) > MAX_EXPONENT:
        raise PreconditionError(f"exponent overflow: {result}")
    return result


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Return a / b; the caller guarantees b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------

class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def grevlex_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order; larger `key` means larger monomial.

    kind is one of "grevlex", "lex", "block" (the first `block` variables
    are eliminated, grevlex inside each block) or "weighted" (weight
    vector first, grevlex tie-break).
    """

    kind: str = "grevlex"
    block: int = 0
    weights: Tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in {"grevlex", "lex", "block", "weighted"}:
            raise PreconditionError(f"unknown monomial order {self.kind!r}")
        if self.kind == "weighted" and any(w < 0 for w in self.weights):
            raise PreconditionError("weights must be nonnegative")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def block_elimination(cls, size: int) -> "MonomialOrder":
        return cls("block", block=size)

    @classmethod
    def weighted(cls, weights: Sequence[int]) -> "MonomialOrder":
        return cls("weighted", weights=tuple(weights))

    def key_function(self) -> Callable[[Monomial], tuple]:
        if self.kind == "grevlex":
            return grevlex_key
        if self.kind == "lex":
            return tuple
        if self.kind == "block":
            size = self.block
            return lambda m: (grevlex_key(m[:size]), grevlex_key(m[size:]))
        weights = self.weights
        return lambda m: (sum(w * e for w, e in zip(weights, m)), grevlex_key(m))

    def __str__(self) -> str:
        if self.kind == "block":
            return f"block({self.block})"
        if self.kind == "weighted":
            return f"weighted{self.weights}"
        return self.kind


GREVLEX = MonomialOrder.grevlex()


def monomial_compare(a: Monomial, b: Monomial, order: MonomialOrder) -> Ordering:
    """Compare two monomials under `order`.

    Raises:
        PreconditionError: if the exponent vectors have different lengths.
    """
    if len(a) != len(b):
        raise PreconditionError(f"monomials of different lengths: {len(a)} vs {len(b)}")
    if order.kind == "weighted" and len(order.weights) != len(a):
        raise PreconditionError("weight vector length does not match the monomials")
    key = order.key_function()
    ka, kb = key(a), key(b)
    if ka == kb:
        return Ordering.EQUAL
    return Ordering.GREATER if ka > kb else Ordering.LESS


# ---------------------------------------------------------------------------
# Coefficient field
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeField:
    """The field F_p."""

    p: int

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise PreconditionError(f"characteristic {self.p} is not prime")

    def __call__(self, value: int) -> int:
        return value % self.p

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(value, -1, self.p)

    def from_rational(self, numerator: int, denominator: int) -> int:
        return numerator % self.p * self.inv(denominator) % self.p


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------

class PolyRing:
    """Polynomial ring F_p[variables] with a fixed monomial order."""

    def __init__(
        self,
        variables: Sequence[str],
        order: Optional[MonomialOrder] = None,
        prime: Optional[int] = None,
    ) -> None:
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PreconditionError(f"duplicate variable names in {variables}")
        order = order or GREVLEX
        if order.kind == "weighted" and len(order.weights) != len(variables):
            raise PreconditionError("weight vector length does not match the variable count")
        if order.kind == "block" and not 0 <= order.block <= len(variables):
            raise PreconditionError("block size exceeds the variable count")
        self.variables: Tuple[str, ...] = variables
        self.nvars = len(variables)
        self.order = order
        self.field = PrimeField(prime if prime is not None else default_prime())
        self.prime = self.field.p
        self._key = order.key_function()
        self._key_cache: Dict[Monomial, tuple] = {}
        self._index = {name: i for i, name in enumerate(variables)}

    # --- identity ---------------------------------------------------------

    def _signature(self) -> tuple:
        return (self.variables, self.order, self.prime)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return isinstance(other, PolyRing) and self._signature() == other._signature()

    def __hash__(self) -> int:
        return hash(self._signature())

    def __repr__(self) -> str:
        return f"PolyRing(F_{self.prime}[{', '.join(self.variables)}], {self.order})"

    # --- order ------------------------------------------------------------

    def key(self, m: Monomial) -> tuple:
        cached = self._key_cache.get(m)
        if cached is None:
            cached = self._key(m)
            self._key_cache[m] = cached
        return cached

    def compare(self, a: Monomial, b: Monomial) -> Ordering:
        return monomial_compare(a, b, self.order)

    # --- constructors -----------------------------------------------------

    @property
    def one_monomial(self) -> Monomial:
        return (0,) * self.nvars

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c %= self.prime
        return Polynomial(self, {self.one_monomial: c} if c else {})

    def monomial(self, m: Monomial, coef: int = 1) -> "Polynomial":
        if len(m) != self.nvars:
            raise PreconditionError(f"monomial {m} does not fit {self.nvars} variables")
        coef %= self.prime
        return Polynomial(self, {tuple(m): coef} if coef else {})

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PreconditionError(f"unknown variable {name!r} in {self!r}") from None

    def gen(self, name: Union[str, int]) -> "Polynomial":
        i = self.index(name) if isinstance(name, str) else name
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> List["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def from_terms(self, terms: Iterable[Tuple[int, Monomial]]) -> "Polynomial":
        return poly_normalize(self, terms)

    def parse(self, text: str) -> "Polynomial":
        from src.tools.parsing import parse_polynomial

        return parse_polynomial(self, text)

    # --- derived rings ----------------------------------------------------

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, order, self.prime)

    def extend(self, front: Sequence[str], order: Optional[MonomialOrder] = None) -> "PolyRing":
        """Ring with `front` prepended to the variables."""
        return PolyRing(tuple(front) + self.variables, order or self.order, self.prime)

    def convert(self, f: "Polynomial") -> "Polynomial":
        """Map `f` into this ring by matching variable names.

        Raises:
            PreconditionError: if `f` uses a variable this ring lacks.
        """
        if f.ring == self:
            return f
        if f.ring.prime != self.prime:
            raise PreconditionError("cannot convert between different characteristics")
        positions = []
        for i, name in enumerate(f.ring.variables):
            positions.append(self._index.get(name))
        terms: Dict[Monomial, int] = {}
        for m, c in f.items():
            exps = [0] * self.nvars
            for i, e in enumerate(m):
                if e:
                    if positions[i] is None:
                        raise PreconditionError(
                            f"variable {f.ring.variables[i]!r} is not in {self!r}"
                        )
                    exps[positions[i]] = e
            terms[tuple(exps)] = c
        return Polynomial(self, terms)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Immutable polynomial: nonzero residues indexed by monomials."""

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, int]) -> None:
        # `terms` must already hold reduced nonzero coefficients
        self.ring = ring
        self._terms = terms
        self._sorted: Optional[Tuple[Tuple[int, Monomial], ...]] = None
        self._hash: Optional[int] = None

    # --- views --------------------------------------------------------------

    @property
    def terms(self) -> Tuple[Tuple[int, Monomial], ...]:
        """(coefficient, monomial) pairs, strictly descending in the ring order."""
        if self._sorted is None:
            key = self.ring.key
            self._sorted = tuple(
                (self._terms[m], m) for m in sorted(self._terms, key=key, reverse=True)
            )
        return self._sorted

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self._terms.items())

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(tuple(m), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self.ring.one_monomial in self._terms)

    @property
    def lm(self) -> Monomial:
        if not self._terms:
            raise PreconditionError("the zero polynomial has no leading monomial")
        return self.terms[0][1]

    @property
    def lc(self) -> int:
        if not self._terms:
            return 0
        return self.terms[0][0]

    def leading_term(self) -> "Polynomial":
        return Polynomial(self.ring, {self.lm: self.lc})

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return max((sum(w * e for w, e in zip(weights, m)) for m in self._terms), default=-1)

    def is_homogeneous(self, weights: Optional[Sequence[int]] = None) -> bool:
        weights = weights if weights is not None else (1,) * self.ring.nvars
        degrees = {sum(w * e for w, e in zip(weights, m)) for m in self._terms}
        return len(degrees) <= 1

    def variables_used(self) -> List[str]:
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.ring.variables[i] for i in sorted(used)]

    # --- arithmetic -----------------------------------------------------------

    def _coerce(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise PreconditionError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ring.prime
        terms = dict(self._terms)
        for m, c in other._terms.items():
            v = (terms.get(m, 0) + c) % p
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.ring.prime
        return Polynomial(self.ring, {m: p - c for m, c in self._terms.items()})

    def __sub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        return self.ring.constant(other) - self

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.prime
        c %= p
        if c == 0:
            return self.ring.zero
        return Polynomial(self.ring, {m: v * c % p for m, v in self._terms.items()})

    def mul_term(self, coef: int, mono: Monomial) -> "Polynomial":
        p = self.ring.prime
        coef %= p
        if coef == 0:
            return self.ring.zero
        return Polynomial(
            self.ring, {mono_mul(m, mono): v * coef % p for m, v in self._terms.items()}
        )

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ring.prime
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                terms[m] = (terms.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise PreconditionError("negative powers are not polynomials")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    # --- comparison -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # --- rendering ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        p = self.ring.prime
        pieces: List[str] = []
        for coef, mono in self.terms:
            negative = coef > p // 2
            value = p - coef if negative else coef
            factors = []
            for name, e in zip(self.ring.variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(value)
            elif value == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(value)] + factors)
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"{'-' if negative else '+'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def poly_normalize(ring: PolyRing, terms: Iterable[Tuple[int, Monomial]]) -> Polynomial:
    """Merge like terms, drop zero coefficients and sort descending."""
    p = ring.prime
    merged: Dict[Monomial, int] = {}
    for coef, mono in terms:
        mono = tuple(mono)
        if len(mono) != ring.nvars:
            raise PreconditionError(f"monomial {mono} does not fit {ring.nvars} variables")
        if any(e < 0 for e in mono):
            raise PreconditionError(f"negative exponent in {mono}")
        merged[mono] = (merged.get(mono, 0) + coef) % p
    return Polynomial(ring, {m: c for m, c in merged.items() if c})


def poly_substitute(
    f: Polynomial,
    assignment: Mapping[str, Polynomial],
    target: Optional[PolyRing] = None,
) -> Polynomial:
    """Ring homomorphism sending each variable of `f` to its image.

    Args:
        f: Polynomial to substitute into.
        assignment: Variable name → image; all images share one ring.
        target: Ring of the result when `assignment` is empty.

    Returns:
        The image of `f`.

    Raises:
        PreconditionError: if a variable occurring in `f` has no image.
    """
    rings = {img.ring for img in assignment.values()}
    if len(rings) > 1:
        raise PreconditionError("substitution images live in different rings")
    out_ring = target or (rings.pop() if rings else f.ring)
    images: List[Optional[Polynomial]] = []
    for name in f.ring.variables:
        image = assignment.get(name)
        images.append(out_ring.convert(image) if image is not None else None)

    powers: Dict[Tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        if (i, e) not in powers:
            powers[(i, e)] = images[i] ** e
        return powers[(i, e)]

    result = out_ring.zero
    for m, c in f.items():
        term = out_ring.constant(c)
        for i, e in enumerate(m):
            if not e:
                continue
            if images[i] is None:
                raise PreconditionError(f"no image given for variable {f.ring.variables[i]!r}")
            term = term * power(i, e)
        result = result + term
    return result
