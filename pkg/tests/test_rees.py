import random

import pytest

from src.algebra.polyring import PolyRing
from src.algebra.quotient import QuotientRing
from src.algebra.rees import (
    RelationPoly,
    _coefficient_of,
    evaluate_relation,
    example21_ideal,
    example21_relation,
    example21_ring,
    is_relation,
    koszul_relations,
    rees_polynomial_ring,
    rees_presentation,
    reducible_to_lower_degree,
    relation_type,
    two_param_descent,
)
from src.utilis.errors import PreconditionError


def test_square_of_the_maximal_ideal(poly2):
    R = poly2
    gens = [R("x^2"), R("x*y"), R("y^2")]
    P = rees_presentation(R, gens)
    assert sorted(set(P.degrees())) == [1, 2]
    assert relation_type(P) == 2
    assert all(is_relation(R, r, gens) for r in P.relations)

    quadric = P.relation(P.T(2) ** 2 - P.T(1) * P.T(3))
    assert is_relation(R, quadric, gens)
    assert not reducible_to_lower_degree(P, quadric)

    linear = P.relation(P.ring.convert(R("y")) * P.T(1) - P.ring.convert(R("x")) * P.T(2))
    assert reducible_to_lower_degree(P, P.relation(linear.poly * P.T(3)))


@pytest.mark.parametrize(
    "gens, rt",
    [
        (["x^2", "x*y", "y^2"], 2),
        (["x^2", "x*y", "y^2", "x^2 + x*y"], 2),
        (["x^2", "x*y + x^2", "y^2 - 3*x*y"], 2),
        (["x", "y", "x + y"], 1),
        (["x", "x + y"], 1),
    ],
)
def test_relation_type_ignores_the_generating_set(poly2, gens, rt):
    R = poly2
    assert relation_type(rees_presentation(R, [R(g) for g in gens])) == rt


def test_regular_sequence_is_of_linear_type(poly2):
    R = poly2
    P = rees_presentation(R, [R("x"), R("y")])
    assert relation_type(P) == 1
    assert P.degrees() == [1]
    data = P.to_dict()
    assert data["gens"] == ["x", "y"]
    assert data["relations"][0]["degree"] == 1


def test_principal_ideal_has_no_relations(poly2):
    P = rees_presentation(poly2, [poly2("x^2 + y^2")])
    assert P.relations == ()
    assert relation_type(P) == 1


@pytest.mark.parametrize("seed", range(4))
def test_random_monomial_parameters_have_relation_type_one(seed):
    rng = random.Random(seed)
    R = QuotientRing(PolyRing(["a", "b", "c", "d"], prime=32003))
    gens = [R.ring.gen(v) ** rng.randint(1, 3) for v in R.variables]
    assert relation_type(rees_presentation(R, gens)) == 1


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(4, 20))
def test_random_monomial_parameters_have_relation_type_one_extended(seed):
    rng = random.Random(seed)
    R = QuotientRing(PolyRing(["a", "b", "c", "d"], prime=32003))
    gens = [R.ring.gen(v) ** rng.randint(1, 3) for v in R.variables]
    assert relation_type(rees_presentation(R, gens)) == 1


def test_koszul_relations_vanish(poly3):
    R = poly3
    gens = [R("x^2"), R("y + z"), R("x*z")]
    relations = koszul_relations(gens)
    assert len(relations) == 3
    for F in relations:
        assert F.degree == 1
        assert evaluate_relation(R, F, gens).is_zero()


def test_relation_poly_rejects_mixed_degrees(poly2):
    ring = rees_polynomial_ring(poly2.ring, 2)
    with pytest.raises(PreconditionError):
        RelationPoly.of(ring.parse("T1^2 + x*T2"), 2)
    assert RelationPoly.of(ring.parse("y*T1 - x*T2"), 2).degree == 1


def test_t_variable_clash():
    base = PolyRing(["x", "T1"], prime=32003)
    with pytest.raises(PreconditionError):
        rees_polynomial_ring(base, 2)


def test_generator_zero_in_the_ring(cm_failure_ring):
    R = cm_failure_ring
    with pytest.raises(PreconditionError):
        rees_presentation(R, [R("x"), R("w^2")])
    with pytest.raises(PreconditionError):
        rees_presentation(R, [])


def test_non_relation_is_rejected(poly2):
    P = rees_presentation(poly2, [poly2("x"), poly2("y")])
    with pytest.raises(PreconditionError):
        reducible_to_lower_degree(P, P.relation(P.T(1) ** 2))


# ---------------------------------------------------------------------------
# Non-Cohen-Macaulay family
# ---------------------------------------------------------------------------

def test_family_ring_shape():
    R = example21_ring()
    assert R.variables == ("x", "y", "z", "w")
    assert R.dimension() == 3
    R3 = example21_ring(3)
    assert R3.variables == ("x1", "x2", "x3", "z", "w")
    assert len(example21_ideal(R3, 2)) == 4
    with pytest.raises(PreconditionError):
        example21_ring(1)
    with pytest.raises(PreconditionError):
        example21_ideal(R, 0)


def test_family_n2_relation_is_irreducible(cm_failure_ring):
    R = cm_failure_ring
    gens = example21_ideal(R, 2)
    P = rees_presentation(R, gens)
    F = example21_relation(P, 2)
    assert F.degree == 2
    assert is_relation(R, F, gens)
    assert not reducible_to_lower_degree(P, F)
    assert relation_type(P) >= 2


@pytest.mark.slow
def test_family_n3_relation_is_irreducible(cm_failure_ring):
    R = cm_failure_ring
    gens = example21_ideal(R, 3)
    P = rees_presentation(R, gens)
    F = example21_relation(P, 3)
    assert not reducible_to_lower_degree(P, F)
    assert relation_type(P) >= 3


# ---------------------------------------------------------------------------
# Descent on two parameters
# ---------------------------------------------------------------------------

@pytest.fixture
def planes_setup(two_planes):
    R = two_planes
    Pring = rees_polynomial_ring(R.ring, 2)
    return R, Pring, [R("a + b"), R("c + d")], R("a + b + c + d")


def _leading_coefficient(R, relation):
    return R.normal_form(_coefficient_of(relation.poly, relation.degree, R.ring))


def _recombines(R, Pring, F, result):
    """F − T1^(N−p)·G − T2·H vanishes modulo J."""
    T1, T2 = Pring.gen("T1"), Pring.gen("T2")
    rest = F - T1 ** (result.N - result.p) * result.G.poly - T2 * result.H.poly
    J = [Pring.convert(g) for g in R.J.generators]
    return QuotientRing(Pring, J).is_zero(rest)


def test_descent_lowers_degree_three_to_one(planes_setup):
    R, Pring, sop, gamma = planes_setup
    F = Pring.parse("c*T1^3 - a*T1^2*T2")
    result = two_param_descent(R, sop, F, gamma)
    assert result.status == "ok"
    assert result.ok
    assert result.p == 1
    assert result.G.degree == 1
    assert is_relation(R, result.G, sop)
    assert _recombines(R, Pring, F, result)
    assert _leading_coefficient(R, result.G) == _leading_coefficient(R, RelationPoly.of(F, 2))
    assert result.p >= relation_type(rees_presentation(R, sop))


def test_descent_on_a_second_relation(planes_setup):
    R, Pring, sop, gamma = planes_setup
    F = Pring.parse("d*T1^3 - b*T1^2*T2")
    result = two_param_descent(R, sop, F, gamma)
    assert result.ok
    assert result.p < 3
    assert result.p >= relation_type(rees_presentation(R, sop))
    assert is_relation(R, result.G, sop)
    assert _leading_coefficient(R, result.G) == R("d")
    assert _recombines(R, Pring, F, result)
    assert result.to_dict()["N"] == 3


def test_descent_passes_linear_relations_through(planes_setup):
    R, Pring, sop, gamma = planes_setup
    F = Pring.parse("(c + d)*T1 - (a + b)*T2")
    result = two_param_descent(R, sop, F, gamma)
    assert result.status == "pass_through"
    assert result.G.poly == F


def test_descent_preconditions(planes_setup):
    R, Pring, sop, gamma = planes_setup
    with pytest.raises(PreconditionError):
        two_param_descent(R, sop, Pring.parse("T1^2"), gamma)
    with pytest.raises(PreconditionError):
        two_param_descent(R, sop, Pring.parse("c*T1^3 - a*T1^2*T2"), R("a"))
    with pytest.raises(PreconditionError):
        two_param_descent(R, sop[:1], Pring.parse("c*T1^3 - a*T1^2*T2"), gamma)


def test_two_planes_parameters_have_relation_type_one(planes_setup):
    R, _, sop, _ = planes_setup
    assert relation_type(rees_presentation(R, sop)) == 1
