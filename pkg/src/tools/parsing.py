"""
Text formats for ReesType inputs.

Polynomials use the usual infix syntax (`3*x^2*y - z`, `x**2` also works);
ring files are line oriented:

    # comment
    char 32003
    vars x,y,z,w
    rel w^2
    rel w*z
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Tuple, Union

from sympy import Poly, Symbol, isprime
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    rationalize,
    standard_transformations,
)

from src.algebra.polyring import Polynomial, PolyRing, poly_normalize
from src.algebra.quotient import QuotientRing
from src.utilis.errors import ParseError
from src.utilis.logger import logger

_TRANSFORMATIONS = standard_transformations + (convert_xor, rationalize)


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse `text` into an element of `ring`.

    Rational coefficients are mapped into F_p.

    Raises:
        ParseError: on syntax errors, unknown symbols, non-polynomial
            expressions or denominators divisible by p.
    """
    if not text or not text.strip():
        raise ParseError("empty polynomial")
    symbols = [Symbol(name) for name in ring.variables]
    local = dict(zip(ring.variables, symbols))
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS)
    except Exception as exc:  # sympy raises SyntaxError, TokenError, TypeError, ...
        raise ParseError(f"cannot parse {text!r}: {exc}") from exc

    unknown = {str(s) for s in getattr(expr, "free_symbols", set())} - set(ring.variables)
    if unknown:
        raise ParseError(f"unknown symbols {sorted(unknown)} in {text!r}")
    try:
        poly = Poly(expr, *symbols, domain="QQ")
    except Exception as exc:
        raise ParseError(f"{text!r} is not a polynomial over Q: {exc}") from exc

    p = ring.prime
    terms = []
    for exps, coef in poly.terms():
        numerator, denominator = int(coef.p), int(coef.q)
        if denominator % p == 0:
            raise ParseError(f"coefficient {coef} of {text!r} has a denominator divisible by {p}")
        terms.append((ring.field.from_rational(numerator, denominator), tuple(exps)))
    return poly_normalize(ring, terms)


def parse_ideal_argument(ring: PolyRing, text: str) -> Tuple[Polynomial, ...]:
    """Parse a comma-separated generator list such as `"x^2, x*y, y^2"`."""
    pieces = [piece.strip() for piece in text.split(",")]
    if not text.strip() or any(not piece for piece in pieces):
        raise ParseError(f"malformed generator list {text!r}")
    return tuple(parse_polynomial(ring, piece) for piece in pieces)


# ---------------------------------------------------------------------------
# Ring files
# ---------------------------------------------------------------------------

@dataclass
class RingFile:
    prime: int
    variables: List[str]
    relations: List[str] = field(default_factory=list)

    def polynomial_ring(self) -> PolyRing:
        return PolyRing(self.variables, prime=self.prime)

    def quotient(self) -> QuotientRing:
        ring = self.polynomial_ring()
        return QuotientRing(ring, [parse_polynomial(ring, rel) for rel in self.relations])

    def to_text(self) -> str:
        lines = [f"char {self.prime}", f"vars {','.join(self.variables)}"]
        lines += [f"rel {rel}" for rel in self.relations]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"char": self.prime, "vars": self.variables, "rel": self.relations}


def _parse_variables(value: str, lineno: int) -> List[str]:
    names = [name.strip() for name in value.replace(" ", ",").split(",") if name.strip()]
    if not names:
        raise ParseError(f"line {lineno}: no variables declared")
    for name in names:
        if not name.isidentifier():
            raise ParseError(f"line {lineno}: {name!r} is not a valid variable name")
    if len(set(names)) != len(names):
        raise ParseError(f"line {lineno}: duplicate variable names")
    return names


def parse_ring_file(text: str) -> RingFile:
    """Parse ring-file text.

    Raises:
        ParseError: on unknown directives, a missing or repeated `char`/`vars`
            line, a non-prime characteristic or a `rel` before `vars`.
    """
    prime = None
    variables = None
    relations: List[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, value = line.partition(" ")
        value = value.strip()
        if keyword == "char":
            if prime is not None:
                raise ParseError(f"line {lineno}: repeated char line")
            try:
                prime = int(value)
            except ValueError:
                raise ParseError(f"line {lineno}: char expects an integer, got {value!r}") from None
            if not isprime(prime):
                raise ParseError(f"line {lineno}: characteristic {prime} is not prime")
        elif keyword == "vars":
            if variables is not None:
                raise ParseError(f"line {lineno}: repeated vars line")
            variables = _parse_variables(value, lineno)
        elif keyword == "rel":
            if variables is None:
                raise ParseError(f"line {lineno}: rel before vars")
            if not value:
                raise ParseError(f"line {lineno}: empty relation")
            relations.append(value)
        else:
            raise ParseError(f"line {lineno}: unknown directive {keyword!r}")

    if prime is None or variables is None:
        raise ParseError("a ring file needs a char line and a vars line")
    ring_file = RingFile(prime, variables, relations)
    # fail early on malformed relations
    ring = ring_file.polynomial_ring()
    for rel in relations:
        parse_polynomial(ring, rel)
    return ring_file


def load_ring_file(path: Union[str, Path]) -> RingFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read ring file {path}: {exc}") from exc
    logger.info("Loaded ring file %s", path)
    return parse_ring_file(text)

