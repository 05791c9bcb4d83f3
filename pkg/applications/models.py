from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from core.errors import ArityMismatchError, RingMismatchError
from multisets.models import Grid
from nonvanishing.models import Witness
from polynomials.models import MultivarPoly
from rings.models import RingSpec, RingValue

Point = tuple[RingValue, ...]


@dataclass(frozen=True, slots=True)
class Hyperplane:
    """Zero set of (a, x) - b, stored exactly as given."""

    coeffs: tuple[RingValue, ...]
    offset: RingValue

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ArityMismatchError("A hyperplane needs at least one coefficient")
        for value in self.coeffs:
            if value.ring != self.offset.ring:
                raise RingMismatchError(f"Coefficient in {value.ring}, offset in {self.offset.ring}")

    @classmethod
    def of(cls, ring: RingSpec, coeffs: Sequence[int], offset: int) -> Hyperplane:
        return cls(tuple(ring.from_integer(a) for a in coeffs), ring.from_integer(offset))

    @property
    def ring(self) -> RingSpec:
        return self.offset.ring

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def value_at(self, point: Sequence[RingValue]) -> RingValue:
        if len(point) != self.nvars:
            raise ArityMismatchError(f"Point of length {len(point)} for a plane in {self.nvars} variables")
        total = -self.offset
        for a, s in zip(self.coeffs, point, strict=True):
            total = total + a * s
        return total

    def contains(self, point: Sequence[RingValue]) -> bool:
        return self.value_at(point).is_zero

    def as_poly(self) -> MultivarPoly:
        terms = [((0,) * self.nvars, -self.offset)]
        for index, a in enumerate(self.coeffs):
            terms.append((tuple(1 if i == index else 0 for i in range(self.nvars)), a))
        return MultivarPoly.from_terms(self.ring, self.nvars, terms)

    def __str__(self) -> str:
        return f"{self.as_poly().render()} = 0"


@dataclass(frozen=True, slots=True)
class CoverInstance:
    grid: Grid
    planes: tuple[Hyperplane, ...]

    def __post_init__(self) -> None:
        for plane in self.planes:
            if plane.ring != self.grid.ring:
                raise RingMismatchError(f"Plane over {plane.ring}, grid over {self.grid.ring}")
            if plane.nvars != self.grid.nvars:
                raise ArityMismatchError(f"Plane in {plane.nvars} variables, grid has {self.grid.nvars} factors")

    @property
    def k(self) -> int:
        return len(self.planes)


@dataclass(frozen=True, slots=True)
class MultCoverReport:
    valid_cover: bool
    bound_holds: bool
    k: int
    bound: int
    origin_covered: bool
    deficient_points: tuple[Point, ...] = ()

    @property
    def violation(self) -> bool:
        return self.valid_cover and not self.bound_holds


@dataclass(frozen=True, slots=True)
class CoveringCertificate:
    vanishing_part: MultivarPoly
    plane_product: MultivarPoly
    refutation: MultivarPoly
    witness: Witness
    vanishing_value: RingValue
    plane_value: RingValue
    coverage: int
    required: int

    @property
    def deficient(self) -> bool:
        return self.coverage < self.required


@dataclass(frozen=True, slots=True)
class CubeCoverReport:
    valid: bool
    b_product_nonzero: bool
    m: int
    n: int
    uncovered_vertices: tuple[Point, ...] = ()

    @property
    def bound_holds(self) -> bool:
        return self.m >= self.n

    @property
    def hypotheses_hold(self) -> bool:
        return self.valid and self.b_product_nonzero

    @property
    def violation(self) -> bool:
        return self.hypotheses_hold and not self.bound_holds


@dataclass(frozen=True, slots=True)
class CubeCertificate:
    polynomial: MultivarPoly
    vertex: Point
    value: RingValue


@dataclass(frozen=True, slots=True)
class CoverSearchResult:
    n: int
    minimum: int | None
    cases: int
    truncated: bool = False
    best_planes: tuple[Hyperplane, ...] = ()

    @property
    def violation(self) -> bool:
        return self.minimum is not None and self.minimum < self.n


@dataclass(frozen=True, slots=True)
class BoundVerification:
    instances: int
    cases: int
    violations: list[str] = field(default_factory=list)
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations and not self.truncated


@dataclass(frozen=True, slots=True)
class SnevilyResult:
    permutation: tuple[int, ...] | None
    nodes: int
    truncated: bool = False
    # k = p; distinct a with sum(b) != 0 mod p has no admissible permutation
    full_length: bool = False

    @property
    def found(self) -> bool:
        return self.permutation is not None

    @property
    def violation(self) -> bool:
        return not self.found and not self.truncated and not self.full_length


@dataclass(frozen=True, slots=True)
class SnevilyReport:
    p: int
    max_k: int
    instances: int
    counterexamples: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    truncated: int = 0
    full_length_failures: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples and self.truncated == 0
