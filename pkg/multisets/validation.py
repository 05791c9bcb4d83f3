from collections.abc import Sequence

from core.errors import HypothesisViolation
from rings.models import RingValue

ElementPair = tuple[RingValue, RingValue]


class UnitDifferenceError(HypothesisViolation):
    def __init__(self, pairs: list[ElementPair]) -> None:
        shown = ", ".join(f"({a}, {b})" for a, b in pairs)
        super().__init__("unit_differences", f"Differences are not units for pairs: {shown}")
        self.pairs = pairs


def check_unit_differences(elements: Sequence[RingValue]) -> list[ElementPair]:
    """Every pair (earlier, later) of distinct elements whose difference is not a unit."""
    violations: list[ElementPair] = []
    for i, first in enumerate(elements):
        for second in elements[i + 1 :]:
            if first == second:
                continue
            if not (first - second).is_unit:
                violations.append((first, second))
    return violations
