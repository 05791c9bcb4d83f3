import itertools

import numpy as np
import pytest

from applications.covering import (
    check_cube_cover,
    check_mult_cover,
    covering_certificate,
    cube_certificate,
    full_plane_pool,
    mult_cover_bound,
    mult_cover_grids,
    search_min_cover,
    verify_cube_bound,
    verify_mult_cover_bound,
)
from applications.models import CoverInstance, Hyperplane
from core.errors import HypothesisViolation
from multisets.models import Grid, Multiset
from rings.models import RingSpec

F5 = RingSpec.prime_field(5)


def small_pool(ring: RingSpec) -> list[Hyperplane]:
    pool = [Hyperplane.of(ring, (1,), b) for b in (1, 2, 3)]
    for a in ((1, 0), (0, 1), (1, 1), (1, 4)):
        pool.extend(Hyperplane.of(ring, a, b) for b in (1, 2))
    return pool


def test_mult_cover_bound_over_f5() -> None:
    grids = mult_cover_grids(F5, 2, 6)
    result = verify_mult_cover_bound(grids, small_pool(F5))
    assert result.passed, result.violations[:3]
    assert result.instances == len(grids)
    assert result.cases > 0


@pytest.mark.parametrize("modulus", [4, 6])
@pytest.mark.parametrize("n", [1, 2])
def test_cube_bound_full_pool(modulus: int, n: int) -> None:
    result = verify_cube_bound(RingSpec.residue_ring(modulus), n)
    assert result.passed, result.violations[:3]


@pytest.mark.slow
def test_cube_bound_three_variables() -> None:
    result = verify_cube_bound(RingSpec.residue_ring(4), 3)
    assert result.passed, result.violations[:3]


@pytest.mark.parametrize("ring_text", ["Q", "Z", "Fp:5", "Zn:4", "Zn:6"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coordinate_planes_are_tight(ring_text: str, n: int) -> None:
    ring = RingSpec.parse(ring_text)
    planes = [Hyperplane.of(ring, tuple(1 if j == i else 0 for j in range(n)), 1) for i in range(n)]
    report = check_cube_cover(planes, ring, n)
    assert report.hypotheses_hold
    assert report.m == n
    assert not report.violation
    with pytest.raises(HypothesisViolation):
        cube_certificate(planes, ring, n)


def test_search_reaches_n() -> None:
    ring = RingSpec.residue_ring(4)
    assert search_min_cover(ring, 2, full_plane_pool(ring, 2)).minimum == 2
    result = search_min_cover(ring, 3, full_plane_pool(ring, 3, offsets=(1,)))
    assert result.minimum == 3
    assert not result.violation


def test_multiplicity_pattern_is_tight() -> None:
    grid = Grid((Multiset.of(F5, [(0, 1), (1, 2), (2, 1)]), Multiset.of(F5, [(0, 1), (1, 1)])))
    bound = mult_cover_bound(grid)
    planes = (
        Hyperplane.of(F5, (1, 0), 1),
        Hyperplane.of(F5, (1, 0), 1),
        Hyperplane.of(F5, (1, 0), 2),
        Hyperplane.of(F5, (0, 1), 1),
    )
    report = check_mult_cover(CoverInstance(grid, planes))
    assert report.valid_cover
    assert report.k == bound == 4


def test_certificates_expose_deficient_points() -> None:
    rng = np.random.default_rng(77)
    pool = small_pool(F5)
    checked = 0
    for grid in mult_cover_grids(F5, 2, 6):
        bound = mult_cover_bound(grid)
        if bound == 0:
            continue
        planes = [plane for plane in pool if plane.nvars == grid.nvars]
        for _ in range(3):
            k = int(rng.integers(0, bound))
            chosen = tuple(planes[int(i)] for i in rng.integers(0, len(planes), size=k))
            instance = CoverInstance(grid, chosen)
            certificate = covering_certificate(instance)
            assert certificate.deficient
            assert certificate.witness.point in check_mult_cover(instance).deficient_points
            checked += 1
    assert checked > 50


def test_cube_certificates_over_z6() -> None:
    ring = RingSpec.residue_ring(6)
    pool = [plane for plane in full_plane_pool(ring, 3) if not plane.offset.is_zero]
    for pair in itertools.islice(itertools.combinations(pool, 2), 0, None, 997):
        planes = list(pair)
        if (planes[0].offset * planes[1].offset).is_zero:
            continue
        certificate = cube_certificate(planes, ring, 3)
        assert certificate.vertex in check_cube_cover(planes, ring, 3).uncovered_vertices
