from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

import structlog

from core.errors import HypothesisViolation, InternalContradiction, RingMismatchError
from hermite.basis import HermiteBasis, Pair
from multisets.models import Multiset
from polynomials.models import MultivarPoly
from rings.models import RingValue
from utils.math_utils import binomial

logger = structlog.get_logger("hermite")


@dataclass(frozen=True, slots=True)
class InterpolationData:
    multiset: Multiset
    values: Mapping[Pair, RingValue]

    def __post_init__(self) -> None:
        expected = set(self.multiset.admissible_pairs())
        given = set(self.values)
        if given != expected:
            missing = sorted(f"({s}, {u})" for s, u in expected - given)
            extra = sorted(f"({s}, {u})" for s, u in given - expected)
            raise HypothesisViolation(
                "interpolation_data",
                f"Need one value per admissible pair; missing {missing}, unexpected {extra}",
            )
        for value in self.values.values():
            if value.ring != self.multiset.ring:
                raise RingMismatchError(f"Prescribed value in {value.ring}, multiset over {self.multiset.ring}")


@dataclass(frozen=True, slots=True)
class AlphaTable:
    multiset: Multiset
    alphas: Mapping[Pair, RingValue]
    t: int

    def alpha(self, element: RingValue, order: int) -> RingValue:
        return self.alphas[(element, order)]


def hermite_interpolate(data: InterpolationData, basis: HermiteBasis | None = None) -> MultivarPoly:
    basis = basis or HermiteBasis(data.multiset)
    result = MultivarPoly.zero(data.multiset.ring, 1)
    for pair, value in data.values.items():
        if value.is_zero:
            continue
        result = result + basis.polynomial(*pair).scale(value)
    return result


def monomial_values(ms: Multiset, ell: int) -> dict[Pair, RingValue]:
    """Expansion data of x^ell at the multiset: C(ell, u) * s^(ell - u)."""
    ring = ms.ring
    values: dict[Pair, RingValue] = {}
    for element, order in ms.admissible_pairs():
        coeff = binomial(ell, order)
        values[(element, order)] = ring.zero if coeff == 0 else ring.from_integer(coeff) * element ** (ell - order)
    return values


def monomial_reconstruction(ms: Multiset, ell: int, basis: HermiteBasis | None = None) -> MultivarPoly:
    return hermite_interpolate(InterpolationData(ms, monomial_values(ms, ell)), basis)


def moment_sum(table: AlphaTable, ell: int) -> RingValue:
    ring = table.multiset.ring
    total = ring.zero
    for (element, order), value in monomial_values(table.multiset, ell).items():
        if value.is_zero:
            continue
        total = total + table.alpha(element, order) * value
    return total


def verify_moments(table: AlphaTable) -> bool:
    ring = table.multiset.ring
    for ell in range(table.t + 1):
        expected = ring.one if ell == table.t else ring.zero
        if moment_sum(table, ell) != expected:
            logger.error("moment_identity_failed", ell=ell, t=table.t, ring=str(ring))
            return False
    return True


def alpha_table(ms: Multiset, basis: HermiteBasis | None = None) -> AlphaTable:
    basis = basis or HermiteBasis(ms)
    t = ms.size - 1
    alphas = {pair: poly.coefficient_of((t,)) for pair, poly in basis.all_polynomials().items()}
    table = AlphaTable(ms, alphas, t)
    if not verify_moments(table):
        raise InternalContradiction(f"Alpha table for multiset of size {ms.size} breaks the moment identities")
    return table
