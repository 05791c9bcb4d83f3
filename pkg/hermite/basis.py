from __future__ import annotations

from dataclasses import dataclass

import structlog

from core.errors import ArityMismatchError, HypothesisViolation, RingMismatchError
from multisets.models import Multiset
from polynomials.expansion import expand_at
from polynomials.models import MultivarPoly
from rings.models import RingValue

logger = structlog.get_logger("hermite")

Pair = tuple[RingValue, int]


@dataclass(frozen=True, slots=True)
class DivisibilityStatus:
    divisible: bool
    failing_pair: Pair | None = None

    def __bool__(self) -> bool:
        return self.divisible


def _check_univariate(f: MultivarPoly, ms: Multiset) -> None:
    if f.nvars != 1:
        raise ArityMismatchError(f"Expected a univariate polynomial, got {f.nvars} variables")
    if f.ring != ms.ring:
        raise RingMismatchError(f"Polynomial over {f.ring}, multiset over {ms.ring}")


def local_divisibility(f: MultivarPoly, element: RingValue, mult: int) -> bool:
    """(x - element)^mult divides f, read off the expansion at element."""
    table = expand_at(f, (element,), (mult,))
    return all(coeff.is_zero for coeff in table.coeffs.values())


def divisibility_status(f: MultivarPoly, ms: Multiset) -> DivisibilityStatus:
    _check_univariate(f, ms)
    for element, mult in ms.entries:
        table = expand_at(f, (element,), (mult,))
        for order in range(mult):
            if not table.coeffs[(order,)].is_zero:
                return DivisibilityStatus(False, (element, order))
    return DivisibilityStatus(True)


class HermiteBasis:
    """Basis polynomials h^(s,u) of one multiset; families are cached per base element."""

    def __init__(self, ms: Multiset) -> None:
        self._ms = ms
        self._x = MultivarPoly.variable(ms.ring, 1, 1)
        self._families: dict[RingValue, dict[int, MultivarPoly]] = {}

    @property
    def multiset(self) -> Multiset:
        return self._ms

    def _linear(self, element: RingValue) -> MultivarPoly:
        return self._x - MultivarPoly.constant(self._ms.ring, 1, element)

    def _cofactor(self, base: RingValue) -> MultivarPoly:
        # product over s != base of ((x - s) / (base - s))^m(s)
        result = MultivarPoly.constant(self._ms.ring, 1, 1)
        for element, mult in self._ms.entries:
            if element == base:
                continue
            factor = self._linear(element).scale((base - element).inverse())
            result = result * factor.pow(mult)
        return result

    def auxiliary(self, base: RingValue, power: int) -> MultivarPoly:
        return self._linear(base).pow(power) * self._cofactor(base)

    def _family(self, base: RingValue) -> dict[int, MultivarPoly]:
        if base in self._families:
            return self._families[base]
        mult = self._ms.multiplicity(base)
        cofactor = self._cofactor(base)
        linear = self._linear(base)
        family: dict[int, MultivarPoly] = {}
        for order in range(mult - 1, -1, -1):
            aux = linear.pow(order) * cofactor
            table = expand_at(aux, (base,), (mult,))
            h = aux
            for higher in range(order + 1, mult):
                h = h - family[higher].scale(table.coeffs[(higher,)])
            family[order] = h
        self._families[base] = family
        logger.debug("hermite_family_built", element=str(base), multiplicity=mult)
        return family

    def polynomial(self, base: RingValue, order: int) -> MultivarPoly:
        mult = self._ms.multiplicity(base)
        if mult == 0:
            raise HypothesisViolation("admissible_pair", f"{base} is not in the multiset support")
        if not 0 <= order < mult:
            raise HypothesisViolation("admissible_pair", f"Order {order} outside 0..{mult - 1} for {base}")
        return self._family(base)[order]

    def all_polynomials(self) -> dict[Pair, MultivarPoly]:
        return {pair: self.polynomial(*pair) for pair in self._ms.admissible_pairs()}


def base_polynomial(ms: Multiset, base: RingValue, order: int) -> MultivarPoly:
    return HermiteBasis(ms).polynomial(base, order)
