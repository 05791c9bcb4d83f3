from collections.abc import Callable

import pytest

from applications.snevily import check_snevily_fp
from cli.main import main
from cli.parser import parse_poly
from core.errors import HypothesisViolation
from multisets.models import Grid, Multiset
from multisets.validation import UnitDifferenceError
from nonvanishing.models import WitnessProblem
from nonvanishing.witness import find_witness
from polynomials.expansion import expand_at
from polynomials.models import MinusInfinity, MultivarPoly
from reduction.reducer import reduce
from rings.models import RingSpec

Q = RingSpec.rationals()
Z6 = RingSpec.residue_ring(6)


def plain_grid(ring: RingSpec, *sets: list[int]) -> Grid:
    return Grid(tuple(Multiset.plain(ring, s) for s in sets))


HYPOTHESIS_CASES = [
    pytest.param(lambda: Multiset.plain(Z6, [0, 2]), "unit_differences", id="non_unit_difference"),
    pytest.param(lambda: Multiset.plain(RingSpec.integers(), [1, 3]), "unit_differences", id="integer_gap"),
    pytest.param(
        lambda: WitnessProblem(parse_poly("x1^2", Q), (2,), plain_grid(Q, [0, 1])), "multiset_size", id="size_at_t"
    ),
    pytest.param(
        lambda: WitnessProblem(parse_poly("x1*x2", Q), (2, 0), plain_grid(Q, [0, 1, 2], [0])),
        "leading_coefficient",
        id="zero_target",
    ),
    pytest.param(
        lambda: WitnessProblem(parse_poly("x1 + x2^3", Q), (1, 0), plain_grid(Q, [0, 1], [0, 1])),
        "degree",
        id="degree_above_t",
    ),
    pytest.param(
        lambda: WitnessProblem(MultivarPoly.zero(Q, 1), (0,), plain_grid(Q, [0])),
        "leading_coefficient",
        id="zero_polynomial",
    ),
    pytest.param(lambda: check_snevily_fp(2, (0, 1, 1), (0, 0, 1)), "k_at_most_p", id="k_above_p"),
]


@pytest.mark.parametrize(("build", "hypothesis"), HYPOTHESIS_CASES)
def test_hypothesis_paths(build: Callable[[], object], hypothesis: str) -> None:
    with pytest.raises(HypothesisViolation) as exc_info:
        build()
    assert exc_info.value.hypothesis == hypothesis


def test_unit_difference_error_lists_pairs() -> None:
    with pytest.raises(UnitDifferenceError) as exc_info:
        Multiset.plain(Z6, [0, 1, 2])
    assert len(exc_info.value.pairs) == 1


class TestSmallestCases:
    def test_constant_on_single_point(self) -> None:
        problem = WitnessProblem(MultivarPoly.constant(Q, 1, 5), (0,), plain_grid(Q, [7]))
        witness = find_witness(problem)
        assert witness.point == (Q.from_integer(7),)
        assert witness.value.rep == 5

    def test_constant_in_three_variables(self) -> None:
        ring = RingSpec.prime_field(2)
        problem = WitnessProblem(MultivarPoly.constant(ring, 3, 1), (0, 0, 0), plain_grid(ring, [1], [0], [1]))
        assert find_witness(problem).value == ring.one

    def test_zero_polynomial_reduces_to_zero(self) -> None:
        result = reduce(MultivarPoly.zero(Q, 2), [Multiset.plain(Q, [0]), Multiset.plain(Q, [1])])
        assert result.remainder.is_zero
        assert all(q.is_zero for q in result.quotients)

    def test_zero_polynomial_degree(self) -> None:
        zero = parse_poly("x1 - x1", Q)
        assert zero.is_zero
        assert zero.total_degree() is MinusInfinity()

    def test_expand_zero_polynomial(self) -> None:
        table = expand_at(MultivarPoly.zero(Q, 1), (Q.one,), (2,))
        assert all(c.is_zero for c in table.coeffs.values())


NON_FIELD_COVER = '{"grid": [{"ring": "Zn:4", "elements": [{"value": "0"}]}]}'
ORIGINLESS_COVER = '{"grid": [{"ring": "Q", "elements": [{"value": "1"}]}]}'


@pytest.mark.parametrize(
    ("argv", "code"),
    [
        (["expand", "--ring", "Q", "--poly", "0", "--at", "3"], 0),
        (["expand", "--ring", "Zn:1", "--poly", "x1", "--at", "0"], 2),
        (["expand", "--ring", "Q", "--poly", "x1^", "--at", "0"], 2),
        (["expand", "--ring", "Q", "--poly", "x2", "--nvars", "1", "--at", "0"], 2),
        (["expand", "--ring", "Q", "--poly", "x1", "--at", "0,1"], 2),
        (["reduce", "--ring", "Zn:6", "--poly", "x1", "--sets", '[["0","2"]]'], 1),
        (["reduce", "--ring", "Q", "--poly", "x1", "--sets", "not json"], 2),
        (["snevily", "--p", "4", "--a", "0", "--b", "0"], 2),
        (["snevily", "--p", "2", "--a", "0,1,1", "--b", "0,0,1"], 1),
        (["cover-check", "--mode", "mult", "--instance", NON_FIELD_COVER], 2),
        (["cover-check", "--mode", "mult", "--instance", ORIGINLESS_COVER], 1),
    ],
)
def test_exit_code_corpus(capsys: pytest.CaptureFixture[str], argv: list[str], code: int) -> None:
    assert main(argv) == code
    captured = capsys.readouterr()
    if code == 0:
        assert captured.out.strip()
    else:
        assert captured.out == ""
        assert '"error"' in captured.err
