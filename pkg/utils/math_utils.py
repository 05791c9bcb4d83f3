import itertools
import math
from collections.abc import Callable, Iterator, Sequence
from enum import StrEnum

Exponent = tuple[int, ...]


class TermOrder(StrEnum):
    GRADED_LEX = "grlex"
    LEX = "lex"
    GRADED_REVLEX = "grevlex"


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def exponent_box(bounds: Sequence[int]) -> Iterator[Exponent]:
    """All u with 0 <= u_i < bounds[i], lexicographically."""
    return itertools.product(*(range(b) for b in bounds))


def exponents_of_degree_at_most(nvars: int, degree: int) -> Iterator[Exponent]:
    for exp in itertools.product(range(degree + 1), repeat=nvars):
        if sum(exp) <= degree:
            yield exp


def term_order_key(order: TermOrder) -> Callable[[Exponent], tuple[int, ...]]:
    # larger key means larger term, x1 > x2 > ... > xn
    if order == TermOrder.GRADED_LEX:
        return lambda exp: (sum(exp), *exp)
    if order == TermOrder.LEX:
        return lambda exp: exp
    return lambda exp: (sum(exp), *(-e for e in reversed(exp)))


def exponent_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def unit_exponent(nvars: int, index: int, power: int = 1) -> Exponent:
    return tuple(power if i == index else 0 for i in range(nvars))
