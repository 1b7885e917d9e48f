from pathlib import Path

import pytest

from src.algebra.polyring import PolyRing
from src.algebra.quotient import QuotientRing
from src.algebra.rees import example21_ring

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def poly2() -> QuotientRing:
    """k[x, y] over F_32003."""
    return QuotientRing(PolyRing(["x", "y"], prime=32003))


@pytest.fixture
def poly3() -> QuotientRing:
    return QuotientRing(PolyRing(["x", "y", "z"], prime=32003))


@pytest.fixture
def cm_failure_ring() -> QuotientRing:
    """k[x, y, z, w]/(w², wz), a depth-2 ring of dimension 3."""
    return example21_ring(2, prime=32003)


@pytest.fixture
def two_planes() -> QuotientRing:
    """k[a, b, c, d]/(ab, ad, cb, cd)."""
    return QuotientRing.from_text(["a", "b", "c", "d"], ["a*b", "a*d", "c*b", "c*d"], prime=32003)
