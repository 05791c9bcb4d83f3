import itertools
from collections.abc import Iterator, Sequence

from core.errors import VariableIndexError
from multisets.models import Grid, GridPoint, Multiset
from polynomials.models import MultivarPoly
from utils.math_utils import Exponent, exponent_box


def multiset_size(ms: Multiset) -> int:
    return ms.size


def vanishing_poly(ms: Multiset, var: int = 1, nvars: int = 1) -> MultivarPoly:
    if not 1 <= var <= nvars:
        raise VariableIndexError(f"Variable x{var} outside x1..x{nvars}")
    x = MultivarPoly.variable(ms.ring, nvars, var)
    result = MultivarPoly.constant(ms.ring, nvars, 1)
    for element, mult in ms.entries:
        result = result * (x - MultivarPoly.constant(ms.ring, nvars, element)).pow(mult)
    return result


def grid_points(grid: Grid) -> Iterator[GridPoint]:
    for combo in itertools.product(*(factor.entries for factor in grid.factors)):
        yield GridPoint(
            point=tuple(element for element, _ in combo),
            multiplicities=tuple(mult for _, mult in combo),
        )


def order_vectors(multiplicities: Sequence[int]) -> Iterator[Exponent]:
    return exponent_box(multiplicities)
