"""
Chains of d-tuples under the componentwise order, the thresholds
M(d, k, l) that force a chain of length l, and the constants built from
them for uniform relation-type bounds.

A valid sequence A_1, ..., A_M has |A_i| = k + i. A chain is a
subsequence A_{i_1} ⪯ ... ⪯ A_{i_l}.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from sympy import binomial

from src.utilis.errors import PreconditionError
from src.utilis.logger import logger

IntTuple = Tuple[int, ...]
Oracle = Callable[[int, int, int], int]

DEFAULT_NODE_BUDGET = 2_000_000


def dominated(a: Sequence[int], b: Sequence[int]) -> bool:
    """a ⪯ b componentwise."""
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class TupleSequence:
    d: int
    k: int
    tuples: Tuple[IntTuple, ...]

    def __post_init__(self) -> None:
        if self.d < 1 or self.k < 0:
            raise PreconditionError("need d >= 1 and k >= 0")
        for i, a in enumerate(self.tuples, start=1):
            if len(a) != self.d or any(e < 0 for e in a):
                raise PreconditionError(f"A_{i} = {a} is not a {self.d}-tuple of non-negative integers")
            if sum(a) != self.k + i:
                raise PreconditionError(f"|A_{i}| = {sum(a)}, expected {self.k + i}")

    @classmethod
    def of(cls, d: int, k: int, tuples: Sequence[Sequence[int]]) -> "TupleSequence":
        return cls(d, k, tuple(tuple(a) for a in tuples))

    def __len__(self) -> int:
        return len(self.tuples)


def longest_chain(seq: TupleSequence) -> Tuple[int, ...]:
    """1-based indices of a longest chain, lexicographically smallest among ties."""
    A = seq.tuples
    M = len(A)
    if M == 0:
        return ()
    # best[i]: longest chain starting at i
    best = [1] * M
    for i in range(M - 2, -1, -1):
        for j in range(i + 1, M):
            if best[j] + 1 > best[i] and dominated(A[i], A[j]):
                best[i] = best[j] + 1
    length = max(best)
    current = best.index(length)
    chain = [current]
    while best[current] > 1:
        current = next(
            j for j in range(current + 1, M)
            if best[j] == best[current] - 1 and dominated(A[current], A[j])
        )
        chain.append(current)
    return tuple(i + 1 for i in chain)


@functools.lru_cache(maxsize=None)
def compositions(total: int, d: int) -> Tuple[IntTuple, ...]:
    """d-tuples of non-negative integers summing to `total`, lexicographically descending."""
    if d == 1:
        return ((total,),)
    out = []
    for head in range(total, -1, -1):
        for tail in compositions(total - head, d - 1):
            out.append((head,) + tail)
    return tuple(out)


def enumerate_tuples(width: int, max_sum: int) -> List[IntTuple]:
    """All width-tuples of non-negative integers with sum ≤ max_sum."""
    if width == 0:
        return [()]
    out: List[IntTuple] = []
    for total in range(max_sum + 1):
        out.extend(compositions(total, width))
    return out


# ---------------------------------------------------------------------------
# Threshold search
# ---------------------------------------------------------------------------

@dataclass
class RamseyResult:
    d: int
    k: int
    l: int
    m_max: int
    value: Optional[int]
    witness: List[IntTuple] = field(default_factory=list)
    nodes: int = 0
    elapsed: float = 0.0
    note: str = ""

    @property
    def known(self) -> bool:
        return self.value is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "k": self.k,
            "l": self.l,
            "m_max": self.m_max,
            "M": self.value if self.known else f"unknown above {self.m_max}",
            "witness": [list(a) for a in self.witness],
            "nodes": self.nodes,
            "note": self.note,
        }


class _BudgetExhausted(Exception):
    pass


def ramsey_number_search(
    d: int,
    k: int,
    l: int,
    m_max: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> RamseyResult:
    """Smallest M ≤ m_max such that every valid sequence of length M has an l-chain.

    A depth-first search looks for the longest chain-free sequence; M is one
    more than its length and the sequence itself is the witness for M − 1.
    When a chain-free sequence of length m_max exists, or the node budget
    runs out, the value is unknown.
    """
    if d < 1 or l < 1 or k < 0 or m_max < 1:
        raise PreconditionError("need d, l, m_max >= 1 and k >= 0")
    started = time.perf_counter()
    best: List[IntTuple] = []
    nodes = 0
    sequence: List[IntTuple] = []
    ends: List[int] = []  # longest chain ending at each position

    def extend() -> bool:
        nonlocal nodes, best
        if len(sequence) > len(best):
            best = list(sequence)
        if len(sequence) == m_max:
            return True
        total = k + len(sequence) + 1
        for a in compositions(total, d):
            nodes += 1
            if nodes > node_budget:
                raise _BudgetExhausted
            end = 1 + max((e for b, e in zip(sequence, ends) if dominated(b, a)), default=0)
            if end >= l:
                continue
            sequence.append(a)
            ends.append(end)
            if extend():
                return True
            sequence.pop()
            ends.pop()
        return False

    note = ""
    try:
        saturated = extend()
    except _BudgetExhausted:
        saturated = True
        note = f"node budget {node_budget} exhausted"
    elapsed = time.perf_counter() - started

    if saturated:
        logger.info("M(%d,%d,%d): unknown above %d (%s)", d, k, l, m_max, note or "witness reached m_max")
        return RamseyResult(d, k, l, m_max, None, best, nodes, elapsed, note)
    value = len(best) + 1
    logger.info("M(%d,%d,%d) = %d after %d nodes, %.2fs", d, k, l, value, nodes, elapsed)
    return RamseyResult(d, k, l, m_max, value, best, nodes, elapsed)


def search_oracle(m_max: int, node_budget: int = DEFAULT_NODE_BUDGET) -> Oracle:
    """An M(d, k, l) oracle backed by `ramsey_number_search`.

    The oracle raises PreconditionError when a value is unknown below m_max.
    """

    @functools.lru_cache(maxsize=None)
    def oracle(d: int, k: int, l: int) -> int:
        result = ramsey_number_search(d, k, l, m_max, node_budget)
        if not result.known:
            raise PreconditionError(f"M({d},{k},{l}) is unknown above {m_max}")
        return result.value

    return oracle


# ---------------------------------------------------------------------------
# Bound constants
# ---------------------------------------------------------------------------

@dataclass
class BoundConstants:
    """K_i, M_i, N_i for i = 1..steps; M_1 is undefined, N_1 = K_1."""

    d: int
    L: int
    K: Dict[int, int] = field(default_factory=dict)
    M: Dict[int, int] = field(default_factory=dict)
    N: Dict[int, int] = field(default_factory=dict)

    @property
    def steps(self) -> int:
        return len(self.K)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "L": self.L,
            "K": {str(i): v for i, v in self.K.items()},
            "M": {str(i): v for i, v in self.M.items()},
            "N": {str(i): v for i, v in self.N.items()},
        }


def tuple_count(width: int, max_sum: int) -> int:
    """Σ_{l=0}^{max_sum} C(l + width − 1, width − 1), the number of width-tuples with sum ≤ max_sum."""
    return int(sum(binomial(l + width - 1, width - 1) for l in range(max_sum + 1)))


def bound_constants(d: int, L: int, oracle: Oracle, steps: int = 2) -> BoundConstants:
    """K_1 = M(d, 1, L); then M_i, N_i = M(d, 2K_{i−1}, M_i(L − 1) + 1), K_i = 2K_{i−1} + N_i."""
    if steps < 1:
        raise PreconditionError("steps must be at least 1")
    constants = BoundConstants(d, L)
    constants.K[1] = constants.N[1] = oracle(d, 1, L)
    for i in range(2, steps + 1):
        previous = constants.K[i - 1]
        constants.M[i] = tuple_count(i - 1, previous)
        constants.N[i] = oracle(d, 2 * previous, constants.M[i] * (L - 1) + 1)
        constants.K[i] = 2 * previous + constants.N[i]
    logger.info("bound constants d=%d L=%d: K=%s", d, L, constants.K)
    return constants
