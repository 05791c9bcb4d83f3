from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from core.errors import ArityMismatchError, HypothesisViolation, RingMismatchError
from multisets.validation import UnitDifferenceError, check_unit_differences
from rings.models import RingSpec, RingValue


@dataclass(frozen=True, slots=True)
class Multiset:
    ring: RingSpec
    entries: tuple[tuple[RingValue, int], ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise HypothesisViolation("nonempty", "A multiset needs at least one element")
        seen: set[RingValue] = set()
        for element, mult in self.entries:
            if element.ring != self.ring:
                raise RingMismatchError(f"Element {element} lives in {element.ring}, multiset over {self.ring}")
            if mult < 1:
                raise HypothesisViolation("positive_multiplicity", f"Multiplicity of {element} is {mult}")
            if element in seen:
                raise HypothesisViolation("distinct_elements", f"Element {element} listed twice")
            seen.add(element)
        violations = check_unit_differences(self.support)
        if violations:
            raise UnitDifferenceError(violations)

    @classmethod
    def of(cls, ring: RingSpec, pairs: Iterable[tuple[RingValue | int, int]]) -> Multiset:
        entries = tuple((ring.from_integer(s) if isinstance(s, int) else s, m) for s, m in pairs)
        return cls(ring, entries)

    @classmethod
    def plain(cls, ring: RingSpec, elements: Iterable[RingValue | int]) -> Multiset:
        return cls.of(ring, ((s, 1) for s in elements))

    @property
    def support(self) -> tuple[RingValue, ...]:
        return tuple(element for element, _ in self.entries)

    @property
    def size(self) -> int:
        return sum(mult for _, mult in self.entries)

    @property
    def is_plain(self) -> bool:
        return all(mult == 1 for _, mult in self.entries)

    def multiplicity(self, element: RingValue) -> int:
        for candidate, mult in self.entries:
            if candidate == element:
                return mult
        return 0

    def admissible_pairs(self) -> Iterator[tuple[RingValue, int]]:
        for element, mult in self.entries:
            for order in range(mult):
                yield element, order

    def truncated(self, size: int) -> Multiset:
        """Prefix of total size `size`: later entries go first, then the last multiplicity shrinks."""
        if not 1 <= size <= self.size:
            raise HypothesisViolation("truncation_size", f"Cannot truncate size {self.size} multiset to {size}")
        kept: list[tuple[RingValue, int]] = []
        budget = size
        for element, mult in self.entries:
            if budget == 0:
                break
            take = min(mult, budget)
            kept.append((element, take))
            budget -= take
        return Multiset(self.ring, tuple(kept))


@dataclass(frozen=True, slots=True)
class GridPoint:
    point: tuple[RingValue, ...]
    multiplicities: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.multiplicities)

    @property
    def is_origin(self) -> bool:
        return all(value.is_zero for value in self.point)


@dataclass(frozen=True, slots=True)
class Grid:
    factors: tuple[Multiset, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ArityMismatchError("A grid needs at least one factor")
        ring = self.factors[0].ring
        for factor in self.factors[1:]:
            if factor.ring != ring:
                raise RingMismatchError(f"Grid factors over {ring} and {factor.ring}")

    @property
    def ring(self) -> RingSpec:
        return self.factors[0].ring

    @property
    def nvars(self) -> int:
        return len(self.factors)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(factor.size for factor in self.factors)

    @property
    def point_count(self) -> int:
        count = 1
        for factor in self.factors:
            count *= len(factor.entries)
        return count
