import pytest

from src.algebra.groebner import IdealHandle
from src.algebra.polyring import PolyRing
from src.algebra.quotient import (
    QuotientRing,
    colon_in_quotient,
    fedder_fpure,
    frobenius_closure_violations,
    frobenius_power,
    is_regular,
    is_system_of_parameters,
    normal_form_mod,
)
from src.utilis.errors import PreconditionError


def test_unit_ideal_is_rejected():
    ring = PolyRing(["x"], prime=5)
    with pytest.raises(PreconditionError):
        QuotientRing(ring, [ring.parse("x"), ring.parse("x + 1")])


def test_normal_form(cm_failure_ring):
    R = cm_failure_ring
    assert normal_form_mod(R, R("w^3 + x*w*z")).is_zero()
    assert R.is_zero(R("w*z + w^2"))
    assert not R.is_zero(R("w"))
    assert R.dimension() == 3


def test_regular_elements(cm_failure_ring):
    R = cm_failure_ring
    assert is_regular(R, R("x"))
    assert is_regular(R, R("z + w")) is False
    assert not is_regular(R, R("w"))
    with pytest.raises(PreconditionError):
        is_regular(R, R("w^2"))


def test_systems_of_parameters(cm_failure_ring):
    R = cm_failure_ring
    assert is_system_of_parameters(R, [R("x"), R("y"), R("z + w")])
    assert is_system_of_parameters(R, [R("x"), R("y"), R("z")])
    assert not is_system_of_parameters(R, [R("x"), R("y")])
    assert not is_system_of_parameters(R, [R("x"), R("y"), R("w")])


def test_colon_detects_the_zerodivisor(cm_failure_ring):
    R = cm_failure_ring
    colon = colon_in_quotient(R, [R("x"), R("y")], [R("z + w")])
    assert R.contains(colon, R("w"))
    assert not R.contains(colon, R("z"))
    assert colon_in_quotient(R, [R("x")], [R("w^2")]) == [R.ring.one]


def test_frobenius_power():
    ring = PolyRing(["x", "y"], prime=3)
    assert frobenius_power([ring.parse("x + y")], 3) == [ring.parse("x^3 + y^3")]


@pytest.mark.parametrize(
    "prime, variables, relations, expected",
    [
        (2, ["x", "y"], ["x*y"], True),
        (2, ["x"], ["x^2"], False),
        (3, ["x", "y"], [], True),
        (3, ["x"], ["x^3"], False),
        (3, ["x", "y", "z"], ["x*y", "x*z"], True),
    ],
)
def test_fedder_criterion(prime, variables, relations, expected):
    R = QuotientRing.from_text(variables, relations, prime=prime)
    assert fedder_fpure(R.J) is expected


def test_fedder_rejects_mismatched_characteristic():
    R = QuotientRing.from_text(["x", "y"], ["x*y"], prime=2)
    with pytest.raises(PreconditionError):
        fedder_fpure(R.J, p=3)


def test_sampling_finds_a_nilpotent_violation():
    R = QuotientRing.from_text(["x"], ["x^2"], prime=2)
    violations = frobenius_closure_violations(R.J, [[]], samples=10, seed=1)
    assert violations
    assert violations[0].element == "x"


def test_sampling_agrees_on_an_fpure_ring():
    R = QuotientRing.from_text(["x", "y"], ["x*y"], prime=2)
    x, y = R("x"), R("y")
    test_ideals = [[], [x], [y], [x, y]]
    assert frobenius_closure_violations(R.J, test_ideals, samples=40, seed=7) == []


@pytest.mark.parametrize(
    "prime, variables, relation, fpure",
    [
        (2, ["x", "y"], "x*y", True),
        (2, ["x", "y"], "x^2", False),
        (2, ["x", "y"], "x^3 - y^2", False),
        (3, ["x", "y"], "x^2 + y^2", True),
        (2, ["x", "y", "z"], "x*y*z", True),
    ],
)
def test_fedder_agrees_with_frobenius_sampling(prime, variables, relation, fpure):
    R = QuotientRing.from_text(variables, [relation], prime=prime)
    gens = [R(v) for v in variables]
    test_ideals = [[]] + [[g] for g in gens] + [gens]
    violations = frobenius_closure_violations(R.J, test_ideals, samples=200, seed=11)
    assert fedder_fpure(R.J) is fpure
    assert (not violations) == fpure


def test_ideal_includes_defining_relations(two_planes):
    R = two_planes
    lifted = R.ideal([R("a + c")])
    assert isinstance(lifted, IdealHandle)
    assert lifted.contains(R("a^2 + c^2"))
