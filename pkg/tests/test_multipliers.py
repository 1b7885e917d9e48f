import random

import pytest

from src.algebra.monres import MonomialIdeal
from src.algebra.multipliers import (
    certify_on_both,
    cm_multiplier_check,
    colon_transfer_check,
    find_transfer_failure,
    perturb,
    random_transfer_instance,
    rt_perturbation_experiment,
    superficial_check,
)
from src.algebra.quotient import QuotientRing
from src.utilis.errors import PreconditionError


@pytest.fixture
def sop(cm_failure_ring):
    R = cm_failure_ring
    return [R("x"), R("y"), R("z + w")]


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

def test_unit_fails_at_the_last_parameter(cm_failure_ring, sop):
    cert = cm_multiplier_check(cm_failure_ring, cm_failure_ring.ring.one, sop)
    assert not cert.verdict
    assert cert.failed_at() == 3
    assert [c.passed for c in cert.checks] == [True, True, False]
    assert cert.to_dict()["verdict"] == "fail"


def test_nilpotent_w_is_a_multiplier(cm_failure_ring, sop):
    cert = cm_multiplier_check(cm_failure_ring, cm_failure_ring("w"), sop)
    assert cert.verdict
    assert cert.failed_at() is None
    assert cert.to_dict()["verdict"] == "pass"


def test_every_element_certifies_in_a_polynomial_ring(poly2):
    R = poly2
    assert cm_multiplier_check(R, R.ring.one, [R("x"), R("y")]).verdict
    assert certify_on_both(R, R("x^2"), [R("x"), R("y")], [R("x + x^2"), R("y")])


def test_zero_multiplier_is_degenerate(cm_failure_ring, sop):
    cert = cm_multiplier_check(cm_failure_ring, cm_failure_ring("w^2"), sop)
    assert cert.degenerate
    assert cert.verdict


def test_certificate_needs_parameters(cm_failure_ring):
    R = cm_failure_ring
    with pytest.raises(PreconditionError):
        cm_multiplier_check(R, R("w"), [R("x"), R("y")])
    with pytest.raises(PreconditionError):
        cm_multiplier_check(R, R("w"), [R("x"), R("y"), R("z")], max_power=0)


# ---------------------------------------------------------------------------
# Colon transfer
# ---------------------------------------------------------------------------

def test_transfer_failure_for_the_unit(cm_failure_ring, sop):
    failure = find_transfer_failure(cm_failure_ring, cm_failure_ring.ring.one, sop, max_exp=1)
    assert failure is not None
    Iexp, m = failure
    assert Iexp.gens == ((1, 0, 0),)
    assert m == (0, 0, 1)


def test_certified_multiplier_transfers_colons(cm_failure_ring, sop):
    R = cm_failure_ring
    w = R("w")
    assert colon_transfer_check(R, w, sop, MonomialIdeal.of([(1, 0, 0)]), (0, 0, 1))
    rng = random.Random(3)
    for _ in range(10):
        Iexp, m = random_transfer_instance(rng, 3, max_gens=3, max_exp=2)
        assert colon_transfer_check(R, w, sop, Iexp, m)
    assert find_transfer_failure(R, R.ring.one, sop, max_exp=1) is not None


def test_transfer_input_shape(cm_failure_ring, sop):
    with pytest.raises(PreconditionError):
        colon_transfer_check(cm_failure_ring, cm_failure_ring("w"), sop, MonomialIdeal.of([(1, 0)]), (0, 1))


def test_polynomial_ring_has_no_transfer_failure(poly2):
    R = poly2
    assert find_transfer_failure(R, R.ring.one, [R("x"), R("y")], max_exp=2) is None


# ---------------------------------------------------------------------------
# Superficial elements
# ---------------------------------------------------------------------------

def test_variable_is_superficial_for_the_maximal_ideal(poly2):
    R = poly2
    assert superficial_check(R, [R("x"), R("y")], R("x"), 0, 5)


def test_nilpotent_is_not_superficial():
    R = QuotientRing.from_text(["x", "w"], ["w^2"], prime=32003)
    assert not superficial_check(R, [R("x"), R("w")], R("w"), 1, 4)


def test_superficial_edge_cases(poly2):
    R = poly2
    m = [R("x"), R("y")]
    assert not superficial_check(R, [R("x^2"), R("y")], R("x - x"), 0, 3)
    with pytest.raises(PreconditionError):
        superficial_check(R, m, R("x"), 3, 3)
    with pytest.raises(PreconditionError):
        superficial_check(R, m, R("x"), -1, 3)
    with pytest.raises(PreconditionError):
        superficial_check(R, [R("x^2"), R("y")], R("x"), 0, 3)


# ---------------------------------------------------------------------------
# Perturbation
# ---------------------------------------------------------------------------

def test_perturb_is_one_based(poly2):
    R = poly2
    out = perturb([R("x"), R("y")], R("x^2"), 2)
    assert out == [R("x"), R("y + x^2")]
    with pytest.raises(PreconditionError):
        perturb([R("x"), R("y")], R("x^2"), 3)


def test_perturbation_in_a_polynomial_ring(poly2):
    R = poly2
    report = rt_perturbation_experiment(R, [R("x"), R("y")], R("x^2"), 1, superficial_nmax=3)
    assert report.certified
    assert report.rt_x == report.rt_y == 1
    assert report.equal
    assert report.superficial_x and report.superficial_y
    assert report.to_dict()["perturbed"] == ["x^2 + x", "y"]


@pytest.mark.parametrize("alpha", ["a", "c"])
def test_perturbation_of_the_two_planes(two_planes, alpha):
    R = two_planes
    report = rt_perturbation_experiment(R, [R("a + b"), R("c + d")], R(alpha), 1)
    assert report.certified
    assert report.rt_x == 1
    assert report.equal


def test_perturbation_by_the_nilpotent(cm_failure_ring, sop):
    R = cm_failure_ring
    report = rt_perturbation_experiment(R, sop, R("w"), 3)
    assert report.certified
    assert report.equal


def test_perturbation_must_stay_a_parameter_system(poly2):
    R = poly2
    with pytest.raises(PreconditionError):
        rt_perturbation_experiment(R, [R("x"), R("y")], R("-x"), 1)
