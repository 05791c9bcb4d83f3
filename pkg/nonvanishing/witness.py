from __future__ import annotations

from collections.abc import Sequence

import structlog

from core.errors import HypothesisViolation, InternalContradiction
from hermite.interpolation import alpha_table
from multisets.models import Grid
from multisets.operations import grid_points, order_vectors
from nonvanishing.models import CertificateTerm, Witness, WitnessMode, WitnessProblem
from polynomials.expansion import expand_at, single_expansion_coeff
from polynomials.models import MultivarPoly
from reduction.reducer import reduce
from rings.models import RingValue

logger = structlog.get_logger("nonvanishing")


def normalize_problem(f: MultivarPoly, grid: Grid, t: Sequence[int]) -> WitnessProblem:
    problem = WitnessProblem(f, tuple(t), grid)
    if problem.is_tight:
        return problem
    trimmed = Grid(tuple(ms.truncated(t_i + 1) for ms, t_i in zip(grid.factors, problem.t, strict=True)))
    return WitnessProblem(f, problem.t, trimmed)


def certificate_terms(problem: WitnessProblem) -> list[CertificateTerm]:
    tight = normalize_problem(problem.f, problem.grid, problem.t)
    tables = [alpha_table(ms) for ms in tight.grid.factors]
    terms: list[CertificateTerm] = []
    for grid_point in grid_points(tight.grid):
        expansion = expand_at(tight.f, grid_point.point, grid_point.multiplicities)
        for orders in order_vectors(grid_point.multiplicities):
            alpha = tight.f.ring.one
            for table, element, order in zip(tables, grid_point.point, orders, strict=True):
                alpha = alpha * table.alpha(element, order)
            terms.append(CertificateTerm(grid_point.point, orders, alpha, expansion.coeffs[orders]))
    return terms


def _sum_terms(problem: WitnessProblem, terms: Sequence[CertificateTerm]) -> RingValue:
    total = problem.f.ring.zero
    for term in terms:
        total = total + term.contribution
    return total


def certificate_sum(problem: WitnessProblem) -> RingValue:
    return _sum_terms(problem, certificate_terms(problem))


def verify_witness(problem: WitnessProblem, witness: Witness) -> bool:
    if len(witness.point) != problem.f.nvars or len(witness.orders) != problem.f.nvars:
        return False
    for factor, element, order in zip(problem.grid.factors, witness.point, witness.orders, strict=True):
        if not 0 <= order < factor.multiplicity(element):
            return False
    value = single_expansion_coeff(problem.f, witness.point, witness.orders)
    return not value.is_zero and value == witness.value


def _algebraic_witness(problem: WitnessProblem) -> Witness | None:
    terms = certificate_terms(problem)
    total = _sum_terms(problem, terms)
    if total != problem.leading_coefficient:
        raise InternalContradiction(
            f"Certificate sum {total} differs from the coefficient {problem.leading_coefficient} of x^{problem.t}"
        )
    for term in terms:
        if not term.value.is_zero:
            return Witness(term.point, term.orders, term.value)
    return None


def _exhaustive_witness(problem: WitnessProblem) -> Witness | None:
    for grid_point in grid_points(problem.grid):
        expansion = expand_at(problem.f, grid_point.point, grid_point.multiplicities)
        for orders in order_vectors(grid_point.multiplicities):
            value = expansion.coeffs[orders]
            if not value.is_zero:
                return Witness(grid_point.point, orders, value)
    return None


def find_witness(problem: WitnessProblem, mode: WitnessMode = WitnessMode.ALGEBRAIC) -> Witness:
    witness = _algebraic_witness(problem) if mode == WitnessMode.ALGEBRAIC else _exhaustive_witness(problem)
    if witness is None:
        raise InternalContradiction(f"No witness found in {mode.value} mode for a problem meeting every hypothesis")
    if not verify_witness(problem, witness):
        raise InternalContradiction(f"Witness at {[str(s) for s in witness.point]} fails re-verification")
    logger.debug(
        "witness_found",
        mode=mode.value,
        point=[str(s) for s in witness.point],
        orders=list(witness.orders),
        value=str(witness.value),
    )
    return witness


def reduction_nonvanishing(problem: WitnessProblem) -> RingValue:
    """Coefficient of x^t in the grid-basis remainder of f; equals c_t on plain grids."""
    if not all(ms.is_plain for ms in problem.grid.factors):
        raise HypothesisViolation("plain_sets", "The reduction route needs all multiplicities equal to 1")
    tight = normalize_problem(problem.f, problem.grid, problem.t)
    remainder = reduce(tight.f, tight.grid.factors).remainder
    coefficient = remainder.coefficient_of(tight.t)
    if coefficient != tight.leading_coefficient:
        raise InternalContradiction(
            f"Remainder coefficient {coefficient} of x^{tight.t} differs from c_t = {tight.leading_coefficient}"
        )
    return coefficient
