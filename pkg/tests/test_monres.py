import random

import pytest

from src.algebra.monres import (
    MonomialIdeal,
    base_change,
    is_complex,
    is_stable,
    lower_segment_ideal,
    mapping_cone_resolution,
    minors_ideal,
    monomial_colon,
    monomial_ring,
    pairwise_syzygy_matrix,
    random_monomial_ideal,
    rank_over_quotient,
    scalar_rank,
    stable_first_syzygies,
    syzygy_complex,
    verify_rank_height,
)
from src.algebra.quotient import QuotientRing
from src.utilis.errors import PreconditionError


def test_monomial_ideal_keeps_minimal_generators():
    I = MonomialIdeal.of([(2, 0), (3, 0), (1, 1), (2, 1)])
    assert set(I.gens) == {(2, 0), (1, 1)}
    assert I.contains((5, 2))
    assert not I.contains((0, 4))
    assert set(monomial_colon(MonomialIdeal.of([(2, 0), (0, 1)]), (1, 0)).gens) == {(1, 0), (0, 1)}


@pytest.mark.parametrize(
    "gens, betti",
    [
        ([(2, 0), (1, 1), (0, 2)], [1, 3, 2]),
        ([(2, 0), (1, 1)], [1, 2, 1]),
        ([(1, 0), (0, 1)], [1, 2, 1]),
        ([(1, 0, 0), (0, 1, 0), (0, 0, 1)], [1, 3, 3, 1]),
    ],
)
def test_mapping_cone_betti_numbers(gens, betti):
    C = mapping_cone_resolution(MonomialIdeal.of(gens))
    assert C.ranks == betti
    assert is_complex(C)
    assert C.to_dict()["betti"] == betti


def test_mapping_cone_satisfies_rank_and_height():
    C = mapping_cone_resolution(MonomialIdeal.of([(2, 0), (1, 1), (0, 2)]))
    assert C.expected_ranks() == [1, 2, 0]
    report = verify_rank_height(QuotientRing(C.ring), C)
    assert report.passed
    assert [row.rank for row in report.rows] == [1, 2]


def corpus_ideal(seed):
    return random_monomial_ideal(random.Random(seed), 4, 6, 3)


@pytest.mark.parametrize("seed", range(20))
def test_random_resolutions_are_acyclic_complexes(seed):
    C = mapping_cone_resolution(corpus_ideal(seed))
    assert is_complex(C)
    assert C.length <= 4
    report = verify_rank_height(QuotientRing(C.ring), C)
    assert report.passed
    assert all(row.radical for row in report.rows if row.position <= 4)


def test_pairwise_syzygies_are_syzygies():
    gens = [(2, 0, 0), (1, 1, 0), (0, 1, 1)]
    ring = monomial_ring(3)
    M = pairwise_syzygy_matrix(gens, ring)
    assert len(M) == 3 and len(M[0]) == 3
    row = [ring.monomial(g) for g in gens]
    for c in range(3):
        column = [M[r][c] for r in range(3)]
        assert sum(1 for e in column if not e.is_zero()) == 2
        total = ring.zero
        for g, e in zip(row, column):
            total = total + g * e
        assert total.is_zero()
    with pytest.raises(PreconditionError):
        pairwise_syzygy_matrix([(1, 0)])


@pytest.mark.parametrize("seed", range(20))
def test_pairwise_syzygies_on_the_corpus(seed):
    I = corpus_ideal(seed)
    gens = list(I.gens)
    if len(gens) < 2:
        with pytest.raises(PreconditionError):
            pairwise_syzygy_matrix(gens)
        return
    ring = monomial_ring(4)
    M = pairwise_syzygy_matrix(gens, ring)
    row = [ring.monomial(g) for g in gens]
    assert len(M[0]) == len(gens) * (len(gens) - 1) // 2
    for c in range(len(M[0])):
        column = [M[r][c] for r in range(len(gens))]
        assert sum(1 for e in column if not e.is_zero()) == 2
        total = ring.zero
        for g, e in zip(row, column):
            total = total + g * e
        assert total.is_zero()
    C = syzygy_complex(I, "pairwise")
    assert is_complex(C)
    report = verify_rank_height(QuotientRing(C.ring), C, positions=[1], expected={1: 1}, check_radical=False)
    assert report.rank_ok and report.height_ok


def test_lower_segment_is_stable():
    segment = lower_segment_ideal((0, 2, 0))
    assert set(segment.gens) == {(0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)}
    assert is_stable(segment, [2, 1, 0])
    assert not is_stable(MonomialIdeal.of([(0, 2, 0)]), [2, 1, 0])
    with pytest.raises(PreconditionError):
        is_stable(segment, [0, 0, 1])


def test_stable_syzygies_form_a_complex():
    segment = lower_segment_ideal((0, 2, 0))
    M = stable_first_syzygies(segment, [2, 1, 0])
    assert len(M) == len(segment.gens)
    C = syzygy_complex(segment, "stable", [2, 1, 0])
    assert is_complex(C)
    report = verify_rank_height(QuotientRing(C.ring), C, positions=[1], expected={1: 1})
    assert report.rank_ok
    with pytest.raises(PreconditionError):
        stable_first_syzygies(MonomialIdeal.of([(0, 2, 0)]), [2, 1, 0])
    with pytest.raises(PreconditionError):
        syzygy_complex(segment, "koszul")


def test_base_change_into_a_quotient(cm_failure_ring):
    R = cm_failure_ring
    C = mapping_cone_resolution(MonomialIdeal.of([(2, 0, 0), (1, 1, 0), (0, 2, 0)]))
    changed = base_change(C, R, [R("x"), R("y"), R("z + w")])
    assert changed.ranks == C.ranks
    assert is_complex(changed, R)
    assert {str(e.monic()) for e in changed.matrix(1)[0]} == {"x^2", "x*y", "y^2"}
    with pytest.raises(PreconditionError):
        base_change(C, R, [R("x")])


def test_koszul_complex_along_parameters_of_the_two_planes(two_planes):
    R = two_planes
    koszul = mapping_cone_resolution(MonomialIdeal.of([(1, 0), (0, 1)]))
    changed = base_change(koszul, R, [R("a + b"), R("c + d")])
    report = verify_rank_height(R, changed)
    assert report.passed
    assert [row.height for row in report.rows] == [2, 2]


def test_koszul_complex_along_a_repeated_element(poly2):
    R = poly2
    koszul = mapping_cone_resolution(MonomialIdeal.of([(1, 0), (0, 1)]))
    changed = base_change(koszul, R, [R("x"), R("x")])
    assert is_complex(changed, R)
    report = verify_rank_height(R, changed)
    assert not report.passed
    first, second = report.rows
    assert first.passed
    assert second.position == 2
    assert not second.height_ok


def test_ranks_and_minors_over_a_quotient(cm_failure_ring):
    R = cm_failure_ring
    M = [[R("x"), R("y")], [R("y"), R("x")]]
    assert rank_over_quotient(R, M) == 2
    assert minors_ideal(R, M, 2) == [R("x^2 - y^2")]
    assert minors_ideal(R, M, 0) == [R.ring.one]
    assert rank_over_quotient(R, [[R("w"), R("w^2")], [R("z"), R("w*z")]]) == 1


def test_scalar_rank():
    assert scalar_rank([[1, 2], [2, 4]], 2, 7) == 1
    assert scalar_rank([[1, 2], [3, 4]], 2, 2) == 1
    assert scalar_rank([[1, 0], [0, 1]], 2, 3) == 2
