from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from core.errors import ArityMismatchError, HypothesisViolation, RingMismatchError
from multisets.models import Grid
from polynomials.models import MultivarPoly
from rings.models import RingValue
from utils.math_utils import Exponent


class WitnessMode(StrEnum):
    ALGEBRAIC = "algebraic"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True, slots=True)
class WitnessProblem:
    f: MultivarPoly
    t: Exponent
    grid: Grid

    def __post_init__(self) -> None:
        if len(self.t) != self.f.nvars or self.grid.nvars != self.f.nvars:
            raise ArityMismatchError(
                f"f has {self.f.nvars} variables, t has {len(self.t)} entries, grid has {self.grid.nvars} factors"
            )
        if self.grid.ring != self.f.ring:
            raise RingMismatchError(f"Polynomial over {self.f.ring}, grid over {self.grid.ring}")
        if any(t_i < 0 for t_i in self.t):
            raise HypothesisViolation("nonnegative_t", f"Exponent vector {self.t} has a negative entry")
        if self.f.coefficient_of(self.t).is_zero:
            raise HypothesisViolation("leading_coefficient", f"Coefficient of x^{self.t} in f is zero")
        if self.f.total_degree() != sum(self.t):
            raise HypothesisViolation(
                "degree", f"deg f = {self.f.total_degree()} differs from sum(t) = {sum(self.t)}"
            )
        for index, (size, t_i) in enumerate(zip(self.grid.sizes, self.t, strict=True), start=1):
            if size <= t_i:
                raise HypothesisViolation(
                    "multiset_size", f"d(S_{index}) = {size} is not larger than t_{index} = {t_i}"
                )

    @property
    def leading_coefficient(self) -> RingValue:
        return self.f.coefficient_of(self.t)

    @property
    def is_tight(self) -> bool:
        return all(size == t_i + 1 for size, t_i in zip(self.grid.sizes, self.t, strict=True))


@dataclass(frozen=True, slots=True)
class Witness:
    point: tuple[RingValue, ...]
    orders: Exponent
    value: RingValue


@dataclass(frozen=True, slots=True)
class CertificateTerm:
    point: tuple[RingValue, ...]
    orders: Exponent
    alpha: RingValue
    value: RingValue

    @property
    def contribution(self) -> RingValue:
        return self.alpha * self.value
