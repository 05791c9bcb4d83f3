import pytest

from core.errors import (
    EXIT_HYPOTHESIS,
    EXIT_INPUT,
    EXIT_THEOREM,
    AlgebraError,
    AlgebraErrorType,
    ArityMismatchError,
    HypothesisViolation,
    InputFormatError,
    InternalContradiction,
    InvalidRingError,
    NotAUnitError,
    PolyParseError,
    RingMismatchError,
    TheoremViolation,
    VariableIndexError,
)


def test_hypothesis_violation_names_hypothesis() -> None:
    err = HypothesisViolation("unit_differences", "2 is not a unit")
    assert err.hypothesis == "unit_differences"
    assert err.error_type == AlgebraErrorType.HYPOTHESIS_VIOLATION
    assert err.exit_code == EXIT_HYPOTHESIS


def test_not_a_unit_is_a_hypothesis_failure() -> None:
    assert NotAUnitError("2 mod 4").exit_code == EXIT_HYPOTHESIS


def test_theorem_violation() -> None:
    err = TheoremViolation("cube_cover", "fewer planes than n")
    assert err.theorem == "cube_cover"
    assert err.exit_code == EXIT_THEOREM


def test_internal_contradiction() -> None:
    assert InternalContradiction("sum mismatch").exit_code == EXIT_THEOREM


def test_parse_error_keeps_position() -> None:
    raw = ValueError("bad")
    err = PolyParseError("Syntax error", 4, raw)
    assert err.position == 4
    assert err.raw_error is raw
    assert "position 4" in str(err)
    assert err.exit_code == EXIT_INPUT


@pytest.mark.parametrize(
    ("error", "error_type"),
    [
        (RingMismatchError("Q vs Z"), AlgebraErrorType.RING_MISMATCH),
        (ArityMismatchError("2 vs 3"), AlgebraErrorType.ARITY_MISMATCH),
        (VariableIndexError("x4"), AlgebraErrorType.VARIABLE_INDEX),
        (InvalidRingError("Fp:6"), AlgebraErrorType.INVALID_RING),
        (InputFormatError("not json"), AlgebraErrorType.INPUT_FORMAT),
    ],
)
def test_input_errors(error: AlgebraError, error_type: AlgebraErrorType) -> None:
    assert isinstance(error, AlgebraError)
    assert error.error_type == error_type
    assert error.exit_code == EXIT_INPUT
