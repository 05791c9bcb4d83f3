from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Final

from core.errors import ArityMismatchError, RingMismatchError, VariableIndexError
from rings.models import RingKind, RingSpec, RingValue
from utils.math_utils import Exponent, TermOrder, exponent_add, term_order_key


class MinusInfinity:
    """Degree of the zero polynomial; below every integer and absorbing under +/-."""

    _instance: MinusInfinity | None = None

    def __new__(cls) -> MinusInfinity:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other: object) -> bool:
        return other is not self

    def __le__(self, other: object) -> bool:
        return True

    def __gt__(self, other: object) -> bool:
        return False

    def __ge__(self, other: object) -> bool:
        return other is self

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("-inf")

    def __add__(self, other: int) -> MinusInfinity:
        return self

    __radd__ = __add__

    def __sub__(self, other: int) -> MinusInfinity:
        return self

    def __repr__(self) -> str:
        return "-inf"


MINUS_INFINITY: Final = MinusInfinity()
Degree = int | MinusInfinity


@dataclass(frozen=True, slots=True, eq=False)
class MultivarPoly:
    ring: RingSpec
    nvars: int
    terms: Mapping[Exponent, RingValue]

    @classmethod
    def from_terms(
        cls, ring: RingSpec, nvars: int, terms: Iterable[tuple[Sequence[int], RingValue]]
    ) -> MultivarPoly:
        if nvars < 1:
            raise ArityMismatchError(f"nvars must be positive, got {nvars}")
        acc: dict[Exponent, RingValue] = {}
        for raw_exp, coeff in terms:
            exp = tuple(raw_exp)
            if len(exp) != nvars:
                raise ArityMismatchError(f"Exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(e < 0 for e in exp):
                raise ArityMismatchError(f"Negative exponent in {exp}")
            if coeff.ring != ring:
                raise RingMismatchError(f"Coefficient in {coeff.ring}, polynomial over {ring}")
            acc[exp] = acc[exp] + coeff if exp in acc else coeff
        return cls(ring, nvars, {e: c for e, c in acc.items() if not c.is_zero})

    @classmethod
    def zero(cls, ring: RingSpec, nvars: int) -> MultivarPoly:
        return cls(ring, nvars, {})

    @classmethod
    def constant(cls, ring: RingSpec, nvars: int, value: RingValue | int) -> MultivarPoly:
        coeff = ring.from_integer(value) if isinstance(value, int) else value
        return cls.from_terms(ring, nvars, [((0,) * nvars, coeff)])

    @classmethod
    def variable(cls, ring: RingSpec, nvars: int, index: int) -> MultivarPoly:
        if not 1 <= index <= nvars:
            raise VariableIndexError(f"Variable x{index} outside x1..x{nvars}")
        exp = tuple(1 if i == index - 1 else 0 for i in range(nvars))
        return cls(ring, nvars, {exp: ring.one})

    @classmethod
    def monomial(cls, ring: RingSpec, exp: Sequence[int], coeff: RingValue | int = 1) -> MultivarPoly:
        value = ring.from_integer(coeff) if isinstance(coeff, int) else coeff
        return cls.from_terms(ring, len(exp), [(exp, value)])

    def _check(self, other: MultivarPoly) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"Polynomials over {self.ring} and {other.ring}")
        if self.nvars != other.nvars:
            raise ArityMismatchError(f"Polynomials in {self.nvars} and {other.nvars} variables")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def add(self, other: MultivarPoly) -> MultivarPoly:
        self._check(other)
        acc = dict(self.terms)
        for exp, coeff in other.terms.items():
            total = acc[exp] + coeff if exp in acc else coeff
            if total.is_zero:
                acc.pop(exp, None)
            else:
                acc[exp] = total
        return MultivarPoly(self.ring, self.nvars, acc)

    def neg(self) -> MultivarPoly:
        return MultivarPoly(self.ring, self.nvars, {e: -c for e, c in self.terms.items()})

    def sub(self, other: MultivarPoly) -> MultivarPoly:
        return self.add(other.neg())

    def scale(self, factor: RingValue) -> MultivarPoly:
        if factor.ring != self.ring:
            raise RingMismatchError(f"Scalar in {factor.ring}, polynomial over {self.ring}")
        scaled = {e: c * factor for e, c in self.terms.items()}
        return MultivarPoly(self.ring, self.nvars, {e: c for e, c in scaled.items() if not c.is_zero})

    def mul(self, other: MultivarPoly) -> MultivarPoly:
        self._check(other)
        acc: dict[Exponent, RingValue] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = exponent_add(e1, e2)
                prod = c1 * c2
                acc[exp] = acc[exp] + prod if exp in acc else prod
        return MultivarPoly(self.ring, self.nvars, {e: c for e, c in acc.items() if not c.is_zero})

    def pow(self, exponent: int) -> MultivarPoly:
        if exponent < 0:
            raise ValueError(f"Negative power {exponent}")
        result = MultivarPoly.constant(self.ring, self.nvars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result.mul(base)
            exponent >>= 1
            if exponent:
                base = base.mul(base)
        return result

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __neg__ = neg
    __pow__ = pow

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultivarPoly):
            return NotImplemented
        return self.ring == other.ring and self.nvars == other.nvars and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.ring, self.nvars, frozenset(self.terms.items())))

    def total_degree(self) -> Degree:
        if self.is_zero:
            return MINUS_INFINITY
        return max(sum(exp) for exp in self.terms)

    def degree_in(self, index: int) -> Degree:
        if not 1 <= index <= self.nvars:
            raise VariableIndexError(f"Variable x{index} outside x1..x{self.nvars}")
        if self.is_zero:
            return MINUS_INFINITY
        return max(exp[index - 1] for exp in self.terms)

    def coefficient_of(self, exp: Sequence[int]) -> RingValue:
        key = tuple(exp)
        if len(key) != self.nvars:
            raise ArityMismatchError(f"Exponent {key} has length {len(key)}, expected {self.nvars}")
        return self.terms.get(key, self.ring.zero)

    def evaluate(self, point: Sequence[RingValue]) -> RingValue:
        if len(point) != self.nvars:
            raise ArityMismatchError(f"Point of length {len(point)} for {self.nvars} variables")
        for value in point:
            if value.ring != self.ring:
                raise RingMismatchError(f"Point coordinate in {value.ring}, polynomial over {self.ring}")
        powers: list[dict[int, RingValue]] = [{0: self.ring.one} for _ in range(self.nvars)]
        total = self.ring.zero
        for exp, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(exp):
                if e not in powers[i]:
                    powers[i][e] = point[i] ** e
                term = term * powers[i][e]
            total = total + term
        return total

    def sorted_terms(self, order: TermOrder = TermOrder.GRADED_LEX) -> list[tuple[Exponent, RingValue]]:
        key = term_order_key(order)
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def leading_exponent(self, order: TermOrder = TermOrder.GRADED_LEX) -> Exponent | None:
        if self.is_zero:
            return None
        key = term_order_key(order)
        return max(self.terms, key=key)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        pieces: list[str] = []
        for exp, coeff in self.sorted_terms():
            negative, magnitude = _split_sign(coeff)
            factors = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e > 0]
            if not factors:
                body = magnitude
            elif magnitude == "1":
                body = "*".join(factors)
            else:
                body = "*".join([magnitude, *factors])
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultivarPoly({self.render()!r}, ring={self.ring}, nvars={self.nvars})"


def _split_sign(coeff: RingValue) -> tuple[bool, str]:
    if coeff.ring.kind in {RingKind.INTEGERS, RingKind.RATIONALS} and coeff.rep < 0:
        return True, str(-coeff.rep)
    return False, str(coeff.rep)
