from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import structlog

from core.errors import ArityMismatchError, HypothesisViolation, InternalContradiction, RingMismatchError
from multisets.models import Multiset
from multisets.operations import vanishing_poly
from polynomials.models import MultivarPoly
from rings.models import RingValue
from utils.math_utils import Exponent, TermOrder, exponent_box, term_order_key, unit_exponent

logger = structlog.get_logger("reduction")


@dataclass(frozen=True, slots=True)
class ReductionResult:
    remainder: MultivarPoly
    quotients: tuple[MultivarPoly, ...]
    basis: tuple[MultivarPoly, ...]

    def reconstruct(self) -> MultivarPoly:
        total = self.remainder
        for h, g in zip(self.quotients, self.basis, strict=True):
            total = total + h * g
        return total


def _validate_sets(f: MultivarPoly, sets: Sequence[Multiset]) -> None:
    if len(sets) != f.nvars:
        raise ArityMismatchError(f"{len(sets)} sets for a polynomial in {f.nvars} variables")
    for index, ms in enumerate(sets, start=1):
        if ms.ring != f.ring:
            raise RingMismatchError(f"S_{index} over {ms.ring}, polynomial over {f.ring}")
        if not ms.is_plain:
            raise HypothesisViolation("plain_sets", f"S_{index} carries multiplicities; reduction needs plain sets")


def grid_basis(sets: Sequence[Multiset]) -> tuple[MultivarPoly, ...]:
    nvars = len(sets)
    return tuple(vanishing_poly(ms, index, nvars) for index, ms in enumerate(sets, start=1))


def reduced_monomials(sets: Sequence[Multiset]) -> list[Exponent]:
    return list(exponent_box([ms.size for ms in sets]))


def _reducible_index(exp: Exponent, degrees: Sequence[int]) -> int | None:
    for i, (e, d) in enumerate(zip(exp, degrees, strict=True)):
        if e >= d:
            return i
    return None


def reduce(f: MultivarPoly, sets: Sequence[Multiset], strategy: TermOrder = TermOrder.GRADED_LEX) -> ReductionResult:
    """Divide f by g_i(x_i) = prod_{s in S_i}(x_i - s), rewriting the order-largest reducible term first."""
    _validate_sets(f, sets)
    basis = grid_basis(sets)
    degrees = [ms.size for ms in sets]
    key = term_order_key(strategy)
    # g_i minus its leading term x_i^{d_i}
    tails = [
        g - MultivarPoly.monomial(f.ring, unit_exponent(f.nvars, i, d))
        for i, (g, d) in enumerate(zip(basis, degrees, strict=True))
    ]

    current: dict[Exponent, RingValue] = dict(f.terms)
    quotient_terms: list[dict[Exponent, RingValue]] = [{} for _ in sets]
    steps = 0
    while True:
        candidates = [exp for exp in current if _reducible_index(exp, degrees) is not None]
        if not candidates:
            break
        exp = max(candidates, key=key)
        i = _reducible_index(exp, degrees)
        assert i is not None
        coeff = current.pop(exp)
        shift = tuple(e - degrees[i] if j == i else e for j, e in enumerate(exp))
        quotient = quotient_terms[i]
        quotient[shift] = quotient[shift] + coeff if shift in quotient else coeff
        if quotient[shift].is_zero:
            del quotient[shift]
        # x^exp = x^shift * (g_i - tail_i): subtract coeff * x^shift * tail_i
        for tail_exp, tail_coeff in tails[i].terms.items():
            target = tuple(a + b for a, b in zip(shift, tail_exp, strict=True))
            delta = -(coeff * tail_coeff)
            total = current[target] + delta if target in current else delta
            if total.is_zero:
                current.pop(target, None)
            else:
                current[target] = total
        steps += 1

    remainder = MultivarPoly(f.ring, f.nvars, current)
    quotients = tuple(MultivarPoly(f.ring, f.nvars, terms) for terms in quotient_terms)
    result = ReductionResult(remainder, quotients, basis)
    _check_degree_bounds(f, result, degrees)
    logger.debug("reduction_finished", strategy=strategy.value, steps=steps, remainder_terms=len(current))
    return result


def _check_degree_bounds(f: MultivarPoly, result: ReductionResult, degrees: Sequence[int]) -> None:
    for index, d in enumerate(degrees, start=1):
        if result.remainder.degree_in(index) >= d:
            raise InternalContradiction(f"Remainder still has degree >= {d} in x{index}")
        if result.quotients[index - 1].total_degree() > f.total_degree() - d:
            raise InternalContradiction(f"Quotient h_{index} exceeds the degree bound deg f - {d}")


def in_ideal(f: MultivarPoly, sets: Sequence[Multiset]) -> bool:
    return reduce(f, sets).remainder.is_zero


def groebner_remainder_stability(
    f: MultivarPoly,
    sets: Sequence[Multiset],
    strategies: Sequence[TermOrder] = (TermOrder.GRADED_LEX, TermOrder.LEX, TermOrder.GRADED_REVLEX),
) -> bool:
    remainders = [reduce(f, sets, strategy).remainder for strategy in strategies]
    stable = all(r == remainders[0] for r in remainders[1:])
    if not stable:
        logger.error("remainder_depends_on_strategy", strategies=[s.value for s in strategies])
    return stable
