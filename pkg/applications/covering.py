from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

import structlog

from applications.models import (
    BoundVerification,
    CoverInstance,
    CoveringCertificate,
    CoverSearchResult,
    CubeCertificate,
    CubeCoverReport,
    Hyperplane,
    MultCoverReport,
    Point,
)
from core.errors import (
    ArityMismatchError,
    HypothesisViolation,
    InvalidRingError,
    RingMismatchError,
    TheoremViolation,
)
from multisets.models import Grid, Multiset
from multisets.operations import grid_points
from nonvanishing.models import WitnessProblem
from nonvanishing.witness import find_witness
from polynomials.expansion import single_expansion_coeff
from polynomials.models import MultivarPoly
from rings.models import RingSpec, RingValue

logger = structlog.get_logger("applications")


def coverage_count(planes: Sequence[Hyperplane], point: Sequence[RingValue]) -> int:
    count = 0
    for plane in planes:
        for value in point:
            if value.ring != plane.ring:
                raise RingMismatchError(f"Point coordinate in {value.ring}, plane over {plane.ring}")
        if plane.contains(point):
            count += 1
    return count


def plane_product(planes: Sequence[Hyperplane], ring: RingSpec, nvars: int) -> MultivarPoly:
    result = MultivarPoly.constant(ring, nvars, 1)
    for plane in planes:
        result = result * plane.as_poly()
    return result


# --- Multiplicity covers ---


def _check_mult_hypotheses(grid: Grid) -> None:
    if not grid.ring.is_field:
        raise InvalidRingError(f"Multiplicity covers are checked over fields only, got {grid.ring}")
    zero = grid.ring.zero
    for index, factor in enumerate(grid.factors, start=1):
        mult = factor.multiplicity(zero)
        if mult == 0:
            raise HypothesisViolation("origin_in_grid", f"0 is not in S_{index}")
        if mult != 1:
            raise HypothesisViolation("origin_multiplicity", f"m_{index}(0) = {mult}, expected 1")


def mult_cover_bound(grid: Grid) -> int:
    return sum(grid.sizes) - grid.nvars


def _requirements(grid: Grid) -> list[tuple[Point, int]]:
    # nonzero support points with the coverage each one needs
    return [
        (grid_point.point, grid_point.weight - grid.nvars + 1)
        for grid_point in grid_points(grid)
        if not grid_point.is_origin
    ]


def check_mult_cover(instance: CoverInstance) -> MultCoverReport:
    grid = instance.grid
    _check_mult_hypotheses(grid)
    origin = tuple(grid.ring.zero for _ in range(grid.nvars))
    origin_covered = coverage_count(instance.planes, origin) > 0
    deficient = tuple(
        point for point, required in _requirements(grid) if coverage_count(instance.planes, point) < required
    )
    bound = mult_cover_bound(grid)
    report = MultCoverReport(
        valid_cover=not origin_covered and not deficient,
        bound_holds=instance.k >= bound,
        k=instance.k,
        bound=bound,
        origin_covered=origin_covered,
        deficient_points=deficient,
    )
    if report.violation:
        logger.error("theorem_violation", check="mult_cover", k=report.k, bound=bound)
    return report


def covering_certificate(instance: CoverInstance) -> CoveringCertificate:
    """Run the refutation polynomial F = P - (P(0)/f(0)) f of a cover with fewer than the bound planes."""
    grid = instance.grid
    ring = grid.ring
    nvars = grid.nvars
    _check_mult_hypotheses(grid)
    bound = mult_cover_bound(grid)
    if instance.k >= bound:
        raise HypothesisViolation("plane_count", f"k = {instance.k} is not below the bound {bound}")
    origin = tuple(ring.zero for _ in range(nvars))
    if coverage_count(instance.planes, origin) > 0:
        raise HypothesisViolation("origin_uncovered", "A plane passes through the origin")

    vanishing = MultivarPoly.constant(ring, nvars, 1)
    for index, factor in enumerate(grid.factors, start=1):
        x = MultivarPoly.variable(ring, nvars, index)
        for element, mult in factor.entries:
            if element.is_zero:
                continue
            vanishing = vanishing * (x - MultivarPoly.constant(ring, nvars, element)).pow(mult)
    product = plane_product(instance.planes, ring, nvars)
    scale = vanishing.evaluate(origin) * product.evaluate(origin).inverse()
    refutation = vanishing - product.scale(scale)

    t = tuple(size - 1 for size in grid.sizes)
    witness = find_witness(WitnessProblem(refutation, t, grid))
    coverage = coverage_count(instance.planes, witness.point)
    required = sum(factor.multiplicity(s) for factor, s in zip(grid.factors, witness.point, strict=True)) - nvars + 1
    certificate = CoveringCertificate(
        vanishing_part=vanishing,
        plane_product=product,
        refutation=refutation,
        witness=witness,
        vanishing_value=single_expansion_coeff(vanishing, witness.point, witness.orders),
        plane_value=single_expansion_coeff(product, witness.point, witness.orders),
        coverage=coverage,
        required=required,
    )
    if not certificate.deficient:
        logger.error("theorem_violation", check="covering_certificate", coverage=coverage, required=required)
        raise TheoremViolation(
            "mult_cover", f"Witness point {[str(s) for s in witness.point]} is covered {coverage} >= {required} times"
        )
    return certificate


# --- Boolean cube covers ---


def cube_vertices(ring: RingSpec, n: int) -> list[Point]:
    """Nonzero {0,1}^n vertices in lexicographic order."""
    zero, one = ring.zero, ring.one
    return [tuple(one if bit else zero for bit in bits) for bits in itertools.product((0, 1), repeat=n) if any(bits)]


def _check_planes(planes: Sequence[Hyperplane], ring: RingSpec, n: int) -> None:
    for plane in planes:
        if plane.ring != ring:
            raise RingMismatchError(f"Plane over {plane.ring}, expected {ring}")
        if plane.nvars != n:
            raise ArityMismatchError(f"Plane in {plane.nvars} variables, expected {n}")


def offset_product(planes: Sequence[Hyperplane], ring: RingSpec) -> RingValue:
    total = ring.one
    for plane in planes:
        total = total * plane.offset
    return total


def check_cube_cover(planes: Sequence[Hyperplane], ring: RingSpec, n: int) -> CubeCoverReport:
    _check_planes(planes, ring, n)
    uncovered = tuple(vertex for vertex in cube_vertices(ring, n) if coverage_count(planes, vertex) == 0)
    report = CubeCoverReport(
        valid=not uncovered,
        b_product_nonzero=not offset_product(planes, ring).is_zero,
        m=len(planes),
        n=n,
        uncovered_vertices=uncovered,
    )
    if report.violation:
        logger.error("theorem_violation", check="cube_cover", m=report.m, n=n, ring=str(ring))
    return report


def cube_certificate(planes: Sequence[Hyperplane], ring: RingSpec, n: int) -> CubeCertificate:
    """Nonzero vertex missed by fewer than n planes with nonzero offset product."""
    _check_planes(planes, ring, n)
    m = len(planes)
    if m >= n:
        raise HypothesisViolation("plane_count", f"m = {m} is not below n = {n}")
    b_product = offset_product(planes, ring)
    if b_product.is_zero:
        raise HypothesisViolation("offset_product", "Product of the plane offsets is zero")

    sign = ring.one if (n + m + 1) % 2 == 0 else -ring.one
    corner = MultivarPoly.constant(ring, n, sign * b_product)
    for index in range(1, n + 1):
        corner = corner * (MultivarPoly.variable(ring, n, index) - MultivarPoly.constant(ring, n, 1))
    polynomial = corner + plane_product(planes, ring, n)

    grid = Grid(tuple(Multiset.plain(ring, (0, 1)) for _ in range(n)))
    witness = find_witness(WitnessProblem(polynomial, (1,) * n, grid))
    if witness.point == tuple(ring.zero for _ in range(n)) or coverage_count(planes, witness.point) > 0:
        logger.error("theorem_violation", check="cube_certificate", m=m, n=n, ring=str(ring))
        raise TheoremViolation("cube_cover", f"Witness {[str(s) for s in witness.point]} is not an uncovered vertex")
    return CubeCertificate(polynomial, witness.point, witness.value)


def full_plane_pool(ring: RingSpec, n: int, offsets: Iterable[int] | None = None) -> list[Hyperplane]:
    """Every plane (a, b) with a in R^n, skipping a = 0."""
    if not ring.is_finite:
        raise InvalidRingError(f"Plane pools are enumerated over finite rings only, got {ring}")
    chosen = list(offsets) if offsets is not None else list(range(ring.modulus))
    pool: list[Hyperplane] = []
    for coeffs in itertools.product(range(ring.modulus), repeat=n):
        if not any(coeffs):
            continue
        for b in chosen:
            pool.append(Hyperplane.of(ring, coeffs, b))
    return pool


def _vertex_masks(planes: Sequence[Hyperplane], vertices: Sequence[Point]) -> list[int]:
    masks = []
    for plane in planes:
        mask = 0
        for position, vertex in enumerate(vertices):
            if plane.contains(vertex):
                mask |= 1 << position
        masks.append(mask)
    return masks


def search_min_cover(
    ring: RingSpec, n: int, pool: Sequence[Hyperplane], max_cases: int = 2_000_000
) -> CoverSearchResult:
    if not ring.is_finite:
        raise InvalidRingError(f"Cover search needs a finite ring, got {ring}")
    _check_planes(pool, ring, n)
    vertices = cube_vertices(ring, n)
    full = (1 << len(vertices)) - 1
    masks = _vertex_masks(pool, vertices)
    cases = 0
    for size in range(1, n + 1):
        for combo in itertools.combinations_with_replacement(range(len(pool)), size):
            cases += 1
            if cases > max_cases:
                logger.warning("cover_search_truncated", ring=str(ring), n=n, cases=max_cases)
                return CoverSearchResult(n=n, minimum=None, cases=max_cases, truncated=True)
            covered = 0
            for index in combo:
                covered |= masks[index]
            if covered != full:
                continue
            planes = tuple(pool[index] for index in combo)
            if offset_product(planes, ring).is_zero:
                continue
            result = CoverSearchResult(n=n, minimum=size, cases=cases, best_planes=planes)
            if result.violation:
                logger.error("theorem_violation", check="cover_search", ring=str(ring), n=n, minimum=size)
            logger.info("cover_search_finished", ring=str(ring), n=n, minimum=size, cases=cases)
            return result
    logger.info("cover_search_finished", ring=str(ring), n=n, minimum=None, cases=cases)
    return CoverSearchResult(n=n, minimum=None, cases=cases)


def verify_cube_bound(
    ring: RingSpec, n: int, pool: Sequence[Hyperplane] | None = None, max_cases: int = 2_000_000
) -> BoundVerification:
    """No family of fewer than n planes from the pool meets the cube-cover hypotheses."""
    if not ring.is_finite:
        raise InvalidRingError(f"Cube bound verification needs a finite ring, got {ring}")
    planes = list(pool) if pool is not None else full_plane_pool(ring, n)
    _check_planes(planes, ring, n)
    vertices = cube_vertices(ring, n)
    full = (1 << len(vertices)) - 1
    masks = _vertex_masks(planes, vertices)
    violations: list[str] = []
    cases = 0
    for size in range(1, n):
        for combo in itertools.combinations_with_replacement(range(len(planes)), size):
            cases += 1
            if cases > max_cases:
                logger.warning("cover_search_truncated", ring=str(ring), n=n, cases=max_cases)
                return BoundVerification(instances=1, cases=max_cases, violations=violations, truncated=True)
            covered = 0
            for index in combo:
                covered |= masks[index]
            if covered != full:
                continue
            chosen = [planes[index] for index in combo]
            if not offset_product(chosen, ring).is_zero:
                violations.append(f"{ring} n={n}: " + "; ".join(str(plane) for plane in chosen))
    if violations:
        logger.error("theorem_violation", check="cube_bound", ring=str(ring), n=n, count=len(violations))
    return BoundVerification(instances=1, cases=cases, violations=violations)


def mult_cover_grids(
    ring: RingSpec, max_vars: int, max_size_sum: int, support: Sequence[int] = (1, 2)
) -> list[Grid]:
    """Grids whose factors hold 0 once plus elements of `support` with any multiplicity."""
    extras_by_size: dict[int, list[tuple[int, ...]]] = {}
    for extra in range(max_size_sum):
        extras_by_size[extra] = [
            mults for mults in itertools.product(range(extra + 1), repeat=len(support)) if sum(mults) == extra
        ]
    factors: list[Multiset] = []
    for extra in range(max_size_sum):
        for mults in extras_by_size[extra]:
            entries = [(0, 1)] + [(s, m) for s, m in zip(support, mults, strict=True) if m > 0]
            factors.append(Multiset.of(ring, entries))
    grids: list[Grid] = []
    for n in range(1, max_vars + 1):
        for combo in itertools.product(factors, repeat=n):
            if sum(factor.size for factor in combo) <= max_size_sum:
                grids.append(Grid(combo))
    return grids


def verify_mult_cover_bound(
    grids: Sequence[Grid], plane_pool: Sequence[Hyperplane], max_cases: int = 2_000_000
) -> BoundVerification:
    """Exhaustive check that no valid multiplicity cover uses fewer than sum(d_i) - n planes.

    Adding an origin-avoiding plane keeps a valid cover valid, so only families of
    exactly bound - 1 origin-avoiding planes are examined.
    """
    violations: list[str] = []
    cases = 0
    for grid in grids:
        _check_mult_hypotheses(grid)
        origin = tuple(grid.ring.zero for _ in range(grid.nvars))
        planes = [plane for plane in plane_pool if plane.nvars == grid.nvars and not plane.contains(origin)]
        size = mult_cover_bound(grid) - 1
        if size < 0 or not planes:
            continue
        requirements = _requirements(grid)
        hits = [[plane.contains(point) for point, _ in requirements] for plane in planes]
        for combo in itertools.combinations_with_replacement(range(len(planes)), size):
            cases += 1
            if cases > max_cases:
                logger.warning("cover_search_truncated", check="mult_bound", cases=max_cases)
                return BoundVerification(instances=len(grids), cases=max_cases, violations=violations, truncated=True)
            counts = [0] * len(requirements)
            for index in combo:
                for position, hit in enumerate(hits[index]):
                    if hit:
                        counts[position] += 1
            if all(count >= required for count, (_, required) in zip(counts, requirements, strict=True)):
                chosen = "; ".join(str(planes[index]) for index in combo)
                violations.append(f"grid sizes {grid.sizes}: {chosen}")
    if violations:
        logger.error("theorem_violation", check="mult_bound", count=len(violations))
    return BoundVerification(instances=len(grids), cases=cases, violations=violations)
