from __future__ import annotations

from fractions import Fraction

import numpy as np

from config.settings import VerificationSettings
from multisets.models import Grid, Multiset
from nonvanishing.models import WitnessProblem
from polynomials.models import MultivarPoly
from rings.models import RingKind, RingSpec, RingValue
from utils.math_utils import Exponent, exponents_of_degree_at_most

INFINITE_CANDIDATES = range(-6, 7)


def random_element(rng: np.random.Generator, ring: RingSpec) -> RingValue:
    if ring.kind == RingKind.RATIONALS:
        return RingValue(Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4))), ring)
    if ring.is_finite:
        return ring.from_integer(int(rng.integers(0, ring.modulus)))
    return ring.from_integer(int(rng.integers(-5, 6)))


def random_nonzero(rng: np.random.Generator, ring: RingSpec) -> RingValue:
    while True:
        value = random_element(rng, ring)
        if not value.is_zero:
            return value


def random_multiset(
    rng: np.random.Generator, ring: RingSpec, max_support: int, max_multiplicity: int
) -> Multiset:
    """Greedy unit-difference support in random order, random multiplicities."""
    pool = list(range(ring.modulus)) if ring.is_finite else list(INFINITE_CANDIDATES)
    support: list[RingValue] = []
    for raw in rng.permutation(pool):
        candidate = ring.from_integer(int(raw))
        if all((candidate - other).is_unit for other in support):
            support.append(candidate)
        if len(support) == max_support:
            break
    mults = rng.integers(1, max_multiplicity + 1, size=len(support))
    return Multiset(ring, tuple((s, int(m)) for s, m in zip(support, mults, strict=True)))


def random_plain_set(rng: np.random.Generator, ring: RingSpec, max_size: int) -> Multiset:
    return random_multiset(rng, ring, max_size, 1)


def random_poly(
    rng: np.random.Generator, ring: RingSpec, nvars: int, max_degree: int, max_terms: int = 8
) -> MultivarPoly:
    exponents = list(exponents_of_degree_at_most(nvars, max_degree))
    count = int(rng.integers(0, max_terms + 1))
    picks = rng.choice(len(exponents), size=min(count, len(exponents)), replace=False)
    return MultivarPoly.from_terms(ring, nvars, [(exponents[int(i)], random_element(rng, ring)) for i in picks])


def _split_budget(rng: np.random.Generator, caps: list[int], budget: int) -> Exponent:
    t = [int(rng.integers(0, cap + 1)) for cap in caps]
    while sum(t) > budget:
        i = int(rng.choice([j for j, value in enumerate(t) if value > 0]))
        t[i] -= 1
    return tuple(t)


def random_problem(rng: np.random.Generator, ring: RingSpec, settings: VerificationSettings) -> WitnessProblem:
    """Problem meeting every hypothesis; the grid may be larger than tight."""
    nvars = int(rng.integers(1, settings.max_vars + 1))
    factors = tuple(random_multiset(rng, ring, 3, settings.max_multiplicity) for _ in range(nvars))
    t = _split_budget(rng, [factor.size - 1 for factor in factors], settings.max_degree_sum)
    degree = sum(t)
    terms: list[tuple[Exponent, RingValue]] = [(t, random_nonzero(rng, ring))]
    for exp in exponents_of_degree_at_most(nvars, degree):
        if exp != t and rng.random() < 0.3:
            terms.append((exp, random_element(rng, ring)))
    f = MultivarPoly.from_terms(ring, nvars, terms)
    return WitnessProblem(f, t, Grid(factors))
