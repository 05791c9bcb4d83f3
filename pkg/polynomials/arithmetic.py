from collections.abc import Sequence

from polynomials.models import Degree, MultivarPoly
from rings.models import RingValue


def poly_add(p: MultivarPoly, q: MultivarPoly) -> MultivarPoly:
    return p.add(q)


def poly_sub(p: MultivarPoly, q: MultivarPoly) -> MultivarPoly:
    return p.sub(q)


def poly_mul(p: MultivarPoly, q: MultivarPoly) -> MultivarPoly:
    return p.mul(q)


def poly_scale(p: MultivarPoly, factor: RingValue) -> MultivarPoly:
    return p.scale(factor)


def total_degree(p: MultivarPoly) -> Degree:
    return p.total_degree()


def degree_in(p: MultivarPoly, index: int) -> Degree:
    return p.degree_in(index)


def coefficient_of(p: MultivarPoly, exp: Sequence[int]) -> RingValue:
    return p.coefficient_of(exp)


def evaluate(p: MultivarPoly, point: Sequence[RingValue]) -> RingValue:
    return p.evaluate(point)
