from fractions import Fraction

import numpy as np
import pytest

from core.errors import ArityMismatchError, HypothesisViolation
from hermite.basis import HermiteBasis, base_polynomial, divisibility_status, local_divisibility
from hermite.interpolation import (
    InterpolationData,
    alpha_table,
    hermite_interpolate,
    moment_sum,
    monomial_reconstruction,
    verify_moments,
)
from multisets.models import Multiset
from polynomials.expansion import expand_at
from polynomials.models import MultivarPoly
from rings.models import RingSpec
from verification.generators import random_element

Q = RingSpec.rationals()


@pytest.fixture
def mixed() -> Multiset:
    return Multiset.of(Q, [(0, 1), (1, 2), (2, 1)])


def x(ring: RingSpec) -> MultivarPoly:
    return MultivarPoly.variable(ring, 1, 1)


def const(ring: RingSpec, value: int) -> MultivarPoly:
    return MultivarPoly.constant(ring, 1, value)


class TestBasis:
    @pytest.mark.parametrize("ring_text", ["Q", "Fp:7", "Zn:12", "Z"])
    def test_delta_property(self, ring_text: str) -> None:
        ring = RingSpec.parse(ring_text)
        ms = Multiset.of(ring, [(0, 3), (1, 2)])
        basis = HermiteBasis(ms)
        for (s, u), h in basis.all_polynomials().items():
            assert h.total_degree() < ms.size
            for element, mult in ms.entries:
                table = expand_at(h, (element,), (mult,))
                for order in range(mult):
                    expected = ring.one if (element, order) == (s, u) else ring.zero
                    assert table.coeffs[(order,)] == expected

    def test_plain_set_gives_lagrange(self) -> None:
        ms = Multiset.plain(Q, [0, 1])
        assert base_polynomial(ms, Q.zero, 0) == const(Q, 1) - x(Q)
        assert base_polynomial(ms, Q.one, 0) == x(Q)

    def test_single_point_gives_taylor_basis(self) -> None:
        ms = Multiset.of(Q, [(0, 2)])
        assert base_polynomial(ms, Q.zero, 1) == x(Q)
        assert base_polynomial(ms, Q.zero, 0) == const(Q, 1)

    def test_pair_outside_support(self, mixed: Multiset) -> None:
        with pytest.raises(HypothesisViolation):
            HermiteBasis(mixed).polynomial(Q.from_integer(3), 0)

    def test_order_too_large(self, mixed: Multiset) -> None:
        with pytest.raises(HypothesisViolation):
            HermiteBasis(mixed).polynomial(Q.one, 2)

    def test_auxiliary_has_expected_degree(self, mixed: Multiset) -> None:
        aux = HermiteBasis(mixed).auxiliary(Q.one, 1)
        # (x - 1) times ((x - 0)/(1 - 0)) * ((x - 2)/(1 - 2))
        assert aux.total_degree() == 3


class TestDivisibility:
    def test_divisible(self, mixed: Multiset) -> None:
        f = x(Q) * (x(Q) - const(Q, 1)).pow(2) * (x(Q) - const(Q, 2))
        assert divisibility_status(f, mixed)

    def test_first_failing_pair(self) -> None:
        ms = Multiset.of(Q, [(0, 2), (1, 1)])
        f = x(Q) * (x(Q) - const(Q, 1))
        status = divisibility_status(f, ms)
        assert not status
        assert status.failing_pair == (Q.zero, 1)

    def test_local_divisibility(self) -> None:
        f = (x(Q) - const(Q, 1)).pow(3)
        assert local_divisibility(f, Q.one, 3)
        assert not local_divisibility(f, Q.zero, 1)

    def test_multivariate_rejected(self, mixed: Multiset) -> None:
        with pytest.raises(ArityMismatchError):
            divisibility_status(MultivarPoly.variable(Q, 2, 1), mixed)


class TestInterpolation:
    @pytest.mark.parametrize("ring_text", ["Q", "Fp:5", "Zn:12"])
    def test_round_trip(self, ring_text: str) -> None:
        ring = RingSpec.parse(ring_text)
        ms = Multiset.of(ring, [(0, 2), (1, 3)])
        basis = HermiteBasis(ms)
        rng = np.random.default_rng(3)
        for _ in range(10):
            coeffs = [random_element(rng, ring) for _ in range(ms.size)]
            f = MultivarPoly.from_terms(ring, 1, [((k,), c) for k, c in enumerate(coeffs)])
            values = {}
            for element, mult in ms.entries:
                table = expand_at(f, (element,), (mult,))
                for order in range(mult):
                    values[(element, order)] = table.coeffs[(order,)]
            assert hermite_interpolate(InterpolationData(ms, values), basis) == f

    def test_prescribed_data(self) -> None:
        ms = Multiset.of(Q, [(0, 2)])
        data = InterpolationData(ms, {(Q.zero, 0): Q.from_integer(3), (Q.zero, 1): Q.from_integer(-1)})
        assert hermite_interpolate(data) == const(Q, 3) - x(Q)

    def test_missing_value(self, mixed: Multiset) -> None:
        with pytest.raises(HypothesisViolation):
            InterpolationData(mixed, {(Q.zero, 0): Q.one})

    def test_monomial_reconstruction(self, mixed: Multiset) -> None:
        for ell in range(mixed.size):
            assert monomial_reconstruction(mixed, ell) == x(Q).pow(ell)


class TestAlphaTable:
    def test_plain_alphas(self) -> None:
        table = alpha_table(Multiset.plain(Q, [0, 1]))
        assert table.alpha(Q.zero, 0).rep == -1
        assert table.alpha(Q.one, 0).rep == 1

    def test_single_point_alphas(self) -> None:
        table = alpha_table(Multiset.of(Q, [(0, 2)]))
        assert table.alpha(Q.zero, 0).is_zero
        assert table.alpha(Q.zero, 1) == Q.one

    def test_lagrange_alphas_three_points(self) -> None:
        # 1 / prod_{s' != s}(s - s')
        table = alpha_table(Multiset.plain(Q, [0, 1, 2]))
        assert [table.alpha(Q.from_integer(s), 0).rep for s in range(3)] == [
            Fraction(1, 2),
            Fraction(-1),
            Fraction(1, 2),
        ]

    @pytest.mark.parametrize("ring_text", ["Q", "Fp:7", "Zn:12", "Z"])
    def test_moments(self, ring_text: str) -> None:
        ring = RingSpec.parse(ring_text)
        ms = Multiset.of(ring, [(0, 2), (1, 2)])
        table = alpha_table(ms)
        assert verify_moments(table)
        assert moment_sum(table, table.t) == ring.one
        for ell in range(table.t):
            assert moment_sum(table, ell).is_zero
