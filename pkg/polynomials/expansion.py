from __future__ import annotations

from collections import defaultdict
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from core.errors import ArityMismatchError, RingMismatchError
from polynomials.models import MultivarPoly
from rings.models import RingValue
from utils.math_utils import Exponent, binomial, exponent_box


@dataclass(frozen=True, slots=True)
class ExpansionTable:
    base_point: tuple[RingValue, ...]
    coeffs: Mapping[Exponent, RingValue]
    truncation: Exponent

    def coefficient(self, u: Sequence[int]) -> RingValue:
        key = tuple(u)
        if len(key) != len(self.truncation) or any(a >= b for a, b in zip(key, self.truncation, strict=True)):
            raise ArityMismatchError(f"Order {key} outside truncation {self.truncation}")
        return self.coeffs[key]


def _check_point(p: MultivarPoly, point: Sequence[RingValue]) -> None:
    if len(point) != p.nvars:
        raise ArityMismatchError(f"Base point of length {len(point)} for {p.nvars} variables")
    for value in point:
        if value.ring != p.ring:
            raise RingMismatchError(f"Base point in {value.ring}, polynomial over {p.ring}")


def _taylor_shift(coeffs: list[RingValue], shift: RingValue) -> None:
    # in place: coefficients of q(x) become those of q(y + shift)
    degree = len(coeffs) - 1
    for j in range(degree):
        for k in range(degree - 1, j - 1, -1):
            coeffs[k] = coeffs[k] + shift * coeffs[k + 1]


def shifted(p: MultivarPoly, point: Sequence[RingValue]) -> MultivarPoly:
    """Re-express p in y = x - point; the coefficient of y^u is f_u(point)."""
    _check_point(p, point)
    zero = p.ring.zero
    terms: dict[Exponent, RingValue] = dict(p.terms)
    for i, s_i in enumerate(point):
        if s_i.is_zero:
            continue
        groups: dict[Exponent, dict[int, RingValue]] = defaultdict(dict)
        for exp, coeff in terms.items():
            groups[exp[:i] + exp[i + 1 :]][exp[i]] = coeff
        shifted_terms: dict[Exponent, RingValue] = {}
        for rest, column in groups.items():
            dense = [column.get(k, zero) for k in range(max(column) + 1)]
            _taylor_shift(dense, s_i)
            for k, coeff in enumerate(dense):
                if not coeff.is_zero:
                    shifted_terms[rest[:i] + (k,) + rest[i:]] = coeff
        terms = shifted_terms
    return MultivarPoly(p.ring, p.nvars, terms)


def expand_at(p: MultivarPoly, point: Sequence[RingValue], bounds: Sequence[int] | None = None) -> ExpansionTable:
    _check_point(p, point)
    if bounds is None:
        # full table: every f_u(s) with u_i <= deg_i f
        degrees = [max((exp[i] for exp in p.terms), default=0) for i in range(p.nvars)]
        truncation = tuple(d + 1 for d in degrees)
    else:
        truncation = tuple(bounds)
        if len(truncation) != p.nvars:
            raise ArityMismatchError(f"Bounds of length {len(truncation)} for {p.nvars} variables")
    expanded = shifted(p, point)
    zero = p.ring.zero
    coeffs = {u: expanded.terms.get(u, zero) for u in exponent_box(truncation)}
    return ExpansionTable(tuple(point), coeffs, truncation)


def single_expansion_coeff(p: MultivarPoly, point: Sequence[RingValue], u: Sequence[int]) -> RingValue:
    _check_point(p, point)
    order = tuple(u)
    if len(order) != p.nvars:
        raise ArityMismatchError(f"Order {order} has length {len(order)}, expected {p.nvars}")
    ring = p.ring
    total = ring.zero
    for exp, coeff in p.terms.items():
        if any(k < w for k, w in zip(exp, order, strict=True)):
            continue
        term = coeff
        for k, w, s in zip(exp, order, point, strict=True):
            term = term * ring.from_integer(binomial(k, w)) * s ** (k - w)
        total = total + term
    return total


def reassemble(table: ExpansionTable) -> MultivarPoly:
    """Sum of f_u(s) * (x - s)^u over the table."""
    point = table.base_point
    ring = point[0].ring
    nvars = len(point)
    linear = [
        MultivarPoly.variable(ring, nvars, i + 1) - MultivarPoly.constant(ring, nvars, s) for i, s in enumerate(point)
    ]
    result = MultivarPoly.zero(ring, nvars)
    for u, coeff in table.coeffs.items():
        if coeff.is_zero:
            continue
        term = MultivarPoly.constant(ring, nvars, coeff)
        for factor, power in zip(linear, u, strict=True):
            if power:
                term = term * factor.pow(power)
        result = result + term
    return result
