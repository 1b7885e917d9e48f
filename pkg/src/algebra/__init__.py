"""Exact commutative algebra over F_p: Gröbner bases, quotients, Rees presentations."""

from src.algebra.groebner import IdealHandle, buchberger, colon_ideal, eliminate, lift, reduce
from src.algebra.polyring import MonomialOrder, Polynomial, PolyRing
from src.algebra.quotient import QuotientRing, fedder_fpure, is_regular, is_system_of_parameters
from src.algebra.rees import ReesPresentation, rees_presentation, relation_type, two_param_descent

__all__ = [
    "IdealHandle",
    "MonomialOrder",
    "Polynomial",
    "PolyRing",
    "QuotientRing",
    "ReesPresentation",
    "buchberger",
    "colon_ideal",
    "eliminate",
    "fedder_fpure",
    "is_regular",
    "is_system_of_parameters",
    "lift",
    "reduce",
    "rees_presentation",
    "relation_type",
    "two_param_descent",
]
