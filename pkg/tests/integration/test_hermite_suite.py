import numpy as np
import pytest

from hermite.basis import HermiteBasis, divisibility_status
from hermite.interpolation import (
    InterpolationData,
    alpha_table,
    hermite_interpolate,
    moment_sum,
    monomial_reconstruction,
)
from multisets.models import Multiset
from multisets.operations import vanishing_poly
from polynomials.expansion import expand_at
from polynomials.models import MultivarPoly
from rings.models import RingSpec
from verification.generators import random_element, random_multiset, random_poly

RINGS = ["Q", "Fp:7", "Fp:11", "Zn:12", "Z"]


def sized_multisets(rng: np.random.Generator, ring: RingSpec, count: int) -> list[Multiset]:
    found: list[Multiset] = []
    while len(found) < count:
        ms = random_multiset(rng, ring, 3, 3)
        if ms.size <= 8:
            found.append(ms)
    return found


def expansion_data(f: MultivarPoly, ms: Multiset) -> dict:
    values = {}
    for element, mult in ms.entries:
        table = expand_at(f, (element,), (mult,))
        for order in range(mult):
            values[(element, order)] = table.coeffs[(order,)]
    return values


def long_remainder(f: MultivarPoly, g: MultivarPoly) -> MultivarPoly:
    """Remainder of univariate long division by a monic g."""
    step = g.total_degree()
    assert isinstance(step, int)
    remainder = f
    while not remainder.is_zero:
        degree = remainder.total_degree()
        assert isinstance(degree, int)
        if degree < step:
            break
        lead = remainder.coefficient_of((degree,))
        remainder = remainder - MultivarPoly.monomial(f.ring, (degree - step,), lead) * g
    return remainder


@pytest.mark.parametrize("ring_text", RINGS)
def test_delta_property(ring_text: str) -> None:
    ring = RingSpec.parse(ring_text)
    rng = np.random.default_rng(61)
    for ms in sized_multisets(rng, ring, 15):
        basis = HermiteBasis(ms)
        for pair, h in basis.all_polynomials().items():
            assert h.total_degree() < ms.size
            data = expansion_data(h, ms)
            for other, value in data.items():
                assert value == (ring.one if other == pair else ring.zero)


@pytest.mark.parametrize("ring_text", RINGS)
def test_interpolation_round_trip(ring_text: str) -> None:
    ring = RingSpec.parse(ring_text)
    rng = np.random.default_rng(62)
    for ms in sized_multisets(rng, ring, 15):
        basis = HermiteBasis(ms)
        coeffs = [random_element(rng, ring) for _ in range(ms.size)]
        f = MultivarPoly.from_terms(ring, 1, [((k,), c) for k, c in enumerate(coeffs)])
        assert hermite_interpolate(InterpolationData(ms, expansion_data(f, ms)), basis) == f


@pytest.mark.parametrize("ring_text", RINGS)
def test_interpolation_ignores_vanishing_multiples(ring_text: str) -> None:
    ring = RingSpec.parse(ring_text)
    rng = np.random.default_rng(65)
    for ms in sized_multisets(rng, ring, 15):
        basis = HermiteBasis(ms)
        f = random_poly(rng, ring, 1, ms.size - 1)
        shifted = f + random_poly(rng, ring, 1, 3) * vanishing_poly(ms)
        data = expansion_data(shifted, ms)
        assert data == expansion_data(f, ms)
        h = hermite_interpolate(InterpolationData(ms, data), basis)
        assert h == f
        assert divisibility_status(shifted - h, ms)


@pytest.mark.parametrize("ring_text", RINGS)
def test_moments_and_monomials(ring_text: str) -> None:
    ring = RingSpec.parse(ring_text)
    rng = np.random.default_rng(63)
    for ms in sized_multisets(rng, ring, 10):
        basis = HermiteBasis(ms)
        table = alpha_table(ms, basis)
        for ell in range(table.t + 1):
            assert moment_sum(table, ell) == (ring.one if ell == table.t else ring.zero)
        x = MultivarPoly.variable(ring, 1, 1)
        for ell in range(ms.size):
            assert monomial_reconstruction(ms, ell, basis) == x.pow(ell)


@pytest.mark.parametrize("ring_text", ["Q", "Fp:7", "Zn:12"])
def test_vanishing_polynomial_is_divisible(ring_text: str) -> None:
    ring = RingSpec.parse(ring_text)
    rng = np.random.default_rng(64)
    x = MultivarPoly.variable(ring, 1, 1)
    for ms in sized_multisets(rng, ring, 10):
        g = MultivarPoly.constant(ring, 1, 1)
        for element, mult in ms.entries:
            g = g * (x - MultivarPoly.constant(ring, 1, element)).pow(mult)
        assert divisibility_status(g * (x + MultivarPoly.constant(ring, 1, 1)), ms)
        assert not divisibility_status(g.sub(MultivarPoly.constant(ring, 1, 1)), ms)


@pytest.mark.parametrize("ring_text", ["Q", "Fp:7", "Zn:12", "Z"])
def test_divisibility_matches_long_division(ring_text: str) -> None:
    ring = RingSpec.parse(ring_text)
    rng = np.random.default_rng(66)
    divisible = 0
    for ms in sized_multisets(rng, ring, 40):
        g = vanishing_poly(ms)
        f = random_poly(rng, ring, 1, ms.size + 3) * g
        if rng.integers(0, 2):
            f = f + random_poly(rng, ring, 1, ms.size - 1, max_terms=2)
        expected = long_remainder(f, g).is_zero
        status = divisibility_status(f, ms)
        assert bool(status) == expected
        assert (status.failing_pair is None) == expected
        divisible += expected
    assert 0 < divisible < 40
