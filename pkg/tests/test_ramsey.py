import itertools
import random

import pytest

from src.algebra.ramsey import (
    TupleSequence,
    bound_constants,
    compositions,
    dominated,
    enumerate_tuples,
    longest_chain,
    ramsey_number_search,
    search_oracle,
    tuple_count,
)
from src.utilis.errors import PreconditionError


def test_dominance():
    assert dominated((1, 0), (1, 2))
    assert not dominated((1, 0), (0, 2))


def test_sequence_validation():
    seq = TupleSequence.of(2, 0, [(1, 0), (0, 2), (1, 2)])
    assert len(seq) == 3
    with pytest.raises(PreconditionError):
        TupleSequence.of(2, 0, [(1, 1)])
    with pytest.raises(PreconditionError):
        TupleSequence.of(2, 0, [(1, 0, 0)])
    with pytest.raises(PreconditionError):
        TupleSequence.of(2, 1, [(3, -1)])


def test_longest_chain_prefers_smallest_indices():
    seq = TupleSequence.of(2, 0, [(1, 0), (0, 2), (1, 2)])
    assert longest_chain(seq) == (1, 3)
    assert longest_chain(TupleSequence.of(1, 0, [])) == ()
    antichain = TupleSequence.of(2, 0, [(1, 0), (0, 2)])
    assert longest_chain(antichain) == (1,)


def test_compositions_and_counts():
    assert compositions(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(enumerate_tuples(2, 2)) == 6
    assert tuple_count(2, 2) == 6
    assert tuple_count(1, 5) == 6
    assert tuple_count(2, 8) == 45
    assert enumerate_tuples(0, 3) == [()]


@pytest.mark.parametrize("k, l", list(itertools.product(range(4), range(1, 6))))
def test_one_dimensional_threshold_is_l(k, l):
    result = ramsey_number_search(1, k, l, m_max=20)
    assert result.known
    assert result.value == l


def test_two_dimensional_antichain():
    result = ramsey_number_search(2, 0, 2, m_max=10)
    assert result.value == 3
    assert result.witness == [(1, 0), (0, 2)]
    data = result.to_dict()
    assert data["M"] == 3
    assert data["witness"] == [[1, 0], [0, 2]]


def test_unknown_when_the_cap_is_reached():
    result = ramsey_number_search(2, 0, 3, m_max=2)
    assert not result.known
    assert len(result.witness) == 2
    assert result.to_dict()["M"] == "unknown above 2"


def test_unknown_when_the_budget_runs_out():
    result = ramsey_number_search(2, 0, 3, m_max=50, node_budget=10)
    assert not result.known
    assert "budget" in result.note


def test_search_arguments_are_checked():
    with pytest.raises(PreconditionError):
        ramsey_number_search(0, 0, 2, m_max=5)
    with pytest.raises(PreconditionError):
        ramsey_number_search(2, -1, 2, m_max=5)


def test_oracle_raises_on_unknown_values():
    oracle = search_oracle(m_max=2)
    assert oracle(1, 0, 2) == 2
    with pytest.raises(PreconditionError):
        oracle(2, 0, 3)


def test_constants_with_a_constant_oracle():
    constants = bound_constants(3, 2, lambda d, k, l: 5, steps=2)
    assert constants.K == {1: 5, 2: 15}
    assert constants.M == {2: 6}
    assert constants.N == {1: 5, 2: 5}


def test_constants_with_the_one_dimensional_oracle():
    constants = bound_constants(1, 2, lambda d, k, l: l, steps=3)
    assert constants.K == {1: 2, 2: 8, 3: 62}
    assert constants.M == {2: 3, 3: 45}
    assert constants.N == {1: 2, 2: 4, 3: 46}
    assert constants.to_dict()["K"] == {"1": 2, "2": 8, "3": 62}


def test_constants_from_the_search_oracle():
    constants = bound_constants(1, 3, search_oracle(m_max=10), steps=2)
    assert constants.K[1] == 3
    assert constants.M[2] == 4
    assert constants.N[2] == 9
    assert constants.K[2] == 15
    with pytest.raises(PreconditionError):
        bound_constants(1, 3, search_oracle(m_max=10), steps=0)


# ---------------------------------------------------------------------------
# Randomized checks
# ---------------------------------------------------------------------------

def random_sequence(rng, d, k, length):
    return TupleSequence.of(d, k, [rng.choice(compositions(k + i, d)) for i in range(1, length + 1)])


def brute_force_chain(seq):
    A = seq.tuples
    for size in range(len(A), 0, -1):
        for picks in itertools.combinations(range(len(A)), size):
            if all(dominated(A[a], A[b]) for a, b in zip(picks, picks[1:])):
                return tuple(i + 1 for i in picks)
    return ()


@pytest.mark.parametrize("d, k", [(2, 0), (2, 1), (3, 0), (3, 2)])
def test_longest_chain_matches_brute_force(d, k):
    rng = random.Random(d * 10 + k)
    for _ in range(60):
        seq = random_sequence(rng, d, k, rng.randint(1, 10))
        chain = longest_chain(seq)
        assert chain == brute_force_chain(seq)
        picked = [seq.tuples[i - 1] for i in chain]
        assert all(dominated(a, b) for a, b in zip(picked, picked[1:]))


@pytest.mark.parametrize("d, k, l", [(2, 0, 2), (2, 1, 2), (1, 2, 4)])
def test_threshold_forces_a_chain(d, k, l):
    result = ramsey_number_search(d, k, l, m_max=10)
    assert result.known
    witness = TupleSequence.of(d, k, result.witness)
    assert len(witness) == result.value - 1
    assert len(longest_chain(witness)) < l
    rng = random.Random(l)
    for _ in range(1000):
        seq = random_sequence(rng, d, k, result.value)
        assert len(longest_chain(seq)) >= l
