from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

import sympy

from core.errors import InputFormatError, InvalidRingError, NotAUnitError, RingMismatchError

Rep = int | Fraction


class RingKind(StrEnum):
    INTEGERS = "Z"
    RATIONALS = "Q"
    PRIME_FIELD = "Fp"
    RESIDUE_RING = "Zn"


@dataclass(frozen=True, slots=True)
class RingSpec:
    kind: RingKind
    modulus: int = 0

    def __post_init__(self) -> None:
        if self.kind == RingKind.PRIME_FIELD:
            if self.modulus < 2 or not sympy.isprime(self.modulus):
                raise InvalidRingError(f"PrimeField modulus must be prime, got {self.modulus}")
        elif self.kind == RingKind.RESIDUE_RING:
            if self.modulus < 2:
                raise InvalidRingError(f"ResidueRing modulus must be >= 2, got {self.modulus}")
        elif self.modulus != 0:
            raise InvalidRingError(f"{self.kind} takes no modulus")

    @classmethod
    def integers(cls) -> RingSpec:
        return cls(RingKind.INTEGERS)

    @classmethod
    def rationals(cls) -> RingSpec:
        return cls(RingKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> RingSpec:
        return cls(RingKind.PRIME_FIELD, p)

    @classmethod
    def residue_ring(cls, n: int) -> RingSpec:
        return cls(RingKind.RESIDUE_RING, n)

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        raw = text.strip()
        if raw == "Z":
            return cls.integers()
        if raw == "Q":
            return cls.rationals()
        head, sep, tail = raw.partition(":")
        if sep and head in {"Fp", "Zn"}:
            try:
                modulus = int(tail)
            except ValueError as exc:
                raise InvalidRingError(f"Bad modulus in ring spec {text!r}") from exc
            if head == "Fp":
                return cls.prime_field(modulus)
            return cls.residue_ring(modulus)
        raise InvalidRingError(f"Unknown ring spec {text!r}; expected Z, Q, Fp:<p> or Zn:<n>")

    def __str__(self) -> str:
        if self.is_modular:
            return f"{self.kind.value}:{self.modulus}"
        return self.kind.value

    @property
    def is_modular(self) -> bool:
        return self.kind in {RingKind.PRIME_FIELD, RingKind.RESIDUE_RING}

    @property
    def is_field(self) -> bool:
        return self.kind in {RingKind.RATIONALS, RingKind.PRIME_FIELD}

    @property
    def is_finite(self) -> bool:
        return self.is_modular

    @property
    def zero(self) -> RingValue:
        return self.from_integer(0)

    @property
    def one(self) -> RingValue:
        return self.from_integer(1)

    def from_integer(self, n: int) -> RingValue:
        if self.kind == RingKind.RATIONALS:
            return RingValue(Fraction(n), self)
        if self.is_modular:
            return RingValue(n % self.modulus, self)
        return RingValue(n, self)

    def parse_element(self, text: str) -> RingValue:
        raw = text.strip()
        num_text, sep, den_text = raw.partition("/")
        try:
            numerator = int(num_text)
            denominator = int(den_text) if sep else 1
        except ValueError as exc:
            raise InputFormatError(f"Cannot read ring element {text!r}", exc) from exc
        if denominator == 0:
            raise InputFormatError(f"Zero denominator in {text!r}")
        if self.kind == RingKind.RATIONALS:
            return RingValue(Fraction(numerator, denominator), self)
        value = self.from_integer(numerator)
        if denominator == 1:
            return value
        return value * self.from_integer(denominator).inverse()

    def elements(self) -> Iterator[RingValue]:
        if not self.is_finite:
            raise InvalidRingError(f"Ring {self} is infinite")
        for rep in range(self.modulus):
            yield RingValue(rep, self)


@dataclass(frozen=True, slots=True)
class RingValue:
    rep: Rep
    ring: RingSpec

    def _check(self, other: RingValue) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"Operands live in {self.ring} and {other.ring}")

    def _wrap(self, rep: Rep) -> RingValue:
        if self.ring.is_modular:
            return RingValue(rep % self.ring.modulus, self.ring)
        return RingValue(rep, self.ring)

    def __add__(self, other: RingValue) -> RingValue:
        self._check(other)
        return self._wrap(self.rep + other.rep)

    def __sub__(self, other: RingValue) -> RingValue:
        self._check(other)
        return self._wrap(self.rep - other.rep)

    def __mul__(self, other: RingValue) -> RingValue:
        self._check(other)
        return self._wrap(self.rep * other.rep)

    def __neg__(self) -> RingValue:
        return self._wrap(-self.rep)

    def __pow__(self, exponent: int) -> RingValue:
        if exponent < 0:
            raise ValueError(f"Negative exponent {exponent}")
        if self.ring.is_modular:
            return RingValue(pow(int(self.rep), exponent, self.ring.modulus), self.ring)
        return RingValue(self.rep**exponent, self.ring)

    def __bool__(self) -> bool:
        return self.rep != 0

    @property
    def is_zero(self) -> bool:
        return self.rep == 0

    @property
    def is_unit(self) -> bool:
        kind = self.ring.kind
        if kind == RingKind.INTEGERS:
            return self.rep in (1, -1)
        if kind == RingKind.RESIDUE_RING:
            return sympy.gcd(int(self.rep), self.ring.modulus) == 1
        return self.rep != 0

    def inverse(self) -> RingValue:
        if not self.is_unit:
            raise NotAUnitError(f"{self} is not a unit in {self.ring}")
        if self.ring.kind == RingKind.RATIONALS:
            return RingValue(1 / Fraction(self.rep), self.ring)
        if self.ring.kind == RingKind.INTEGERS:
            return self
        return RingValue(int(sympy.mod_inverse(int(self.rep), self.ring.modulus)), self.ring)

    def __str__(self) -> str:
        return str(self.rep)

    def __repr__(self) -> str:
        return f"RingValue({self.rep}, {self.ring})"
