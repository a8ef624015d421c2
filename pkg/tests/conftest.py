import cmath
from pathlib import Path

import pytest
from hypothesis import strategies as st

from cyclorder.cycring import CycInt

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def cycints(p, bound=20):
    return st.lists(st.integers(-bound, bound), min_size=p - 1, max_size=p - 1).map(lambda c: CycInt(p, c))


def cycint_pairs(primes=(3, 5, 7), bound=20):
    return st.sampled_from(primes).flatmap(lambda p: st.tuples(cycints(p, bound), cycints(p, bound)))


def embed(x: CycInt, k: int = 1) -> complex:
    """Numeric value of sigma_k(x) under zeta -> exp(2 pi i / p)."""
    w = cmath.exp(2j * cmath.pi * k / x.p)
    return sum(c * w**i for i, c in enumerate(x.coeffs))
