import numpy as np
import pytest

from config.settings import VerificationSettings
from multisets.validation import check_unit_differences
from rings.models import RingSpec
from verification.generators import random_multiset, random_nonzero, random_poly, random_problem


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(11)


@pytest.mark.parametrize("ring_text", ["Q", "Z", "Fp:7", "Zn:12"])
def test_random_multiset_has_unit_differences(rng: np.random.Generator, ring_text: str) -> None:
    ring = RingSpec.parse(ring_text)
    for _ in range(20):
        ms = random_multiset(rng, ring, 3, 2)
        assert check_unit_differences(list(ms.support)) == []
        assert all(1 <= mult <= 2 for _, mult in ms.entries)


def test_integer_support_is_consecutive(rng: np.random.Generator) -> None:
    ring = RingSpec.integers()
    for _ in range(10):
        ms = random_multiset(rng, ring, 3, 1)
        assert len(ms.support) <= 2


def test_random_nonzero(rng: np.random.Generator) -> None:
    ring = RingSpec.residue_ring(2)
    assert all(random_nonzero(rng, ring) == ring.one for _ in range(10))


def test_random_poly_degree(rng: np.random.Generator) -> None:
    ring = RingSpec.rationals()
    for _ in range(10):
        f = random_poly(rng, ring, 2, 3)
        assert f.is_zero or f.total_degree() <= 3


@pytest.mark.parametrize("ring_text", ["Q", "Fp:7", "Zn:12"])
def test_random_problem_respects_caps(rng: np.random.Generator, ring_text: str) -> None:
    ring = RingSpec.parse(ring_text)
    settings = VerificationSettings(max_vars=2, max_multiplicity=2, max_degree_sum=3)
    for _ in range(20):
        problem = random_problem(rng, ring, settings)
        assert problem.f.nvars <= 2
        assert sum(problem.t) <= 3
        assert all(mult <= 2 for factor in problem.grid.factors for _, mult in factor.entries)
