from enum import StrEnum


class AlgebraErrorType(StrEnum):
    RING_MISMATCH = "ring_mismatch"
    ARITY_MISMATCH = "arity_mismatch"
    VARIABLE_INDEX = "variable_index"
    INVALID_RING = "invalid_ring"
    NOT_A_UNIT = "not_a_unit"
    HYPOTHESIS_VIOLATION = "hypothesis_violation"
    THEOREM_VIOLATION = "theorem_violation"
    INTERNAL_CONTRADICTION = "internal_contradiction"
    PARSE = "parse"
    INPUT_FORMAT = "input_format"


EXIT_SUCCESS = 0
EXIT_HYPOTHESIS = 1
EXIT_INPUT = 2
EXIT_THEOREM = 3


class AlgebraError(Exception):
    def __init__(self, error_type: AlgebraErrorType, message: str, raw_error: Exception | None = None) -> None:
        super().__init__(message)
        self.error_type = error_type
        self.raw_error = raw_error

    @property
    def exit_code(self) -> int:
        if self.error_type in {AlgebraErrorType.HYPOTHESIS_VIOLATION, AlgebraErrorType.NOT_A_UNIT}:
            return EXIT_HYPOTHESIS
        if self.error_type in {AlgebraErrorType.THEOREM_VIOLATION, AlgebraErrorType.INTERNAL_CONTRADICTION}:
            return EXIT_THEOREM
        return EXIT_INPUT


class RingMismatchError(AlgebraError):
    def __init__(self, message: str) -> None:
        super().__init__(AlgebraErrorType.RING_MISMATCH, message)


class ArityMismatchError(AlgebraError):
    def __init__(self, message: str) -> None:
        super().__init__(AlgebraErrorType.ARITY_MISMATCH, message)


class VariableIndexError(AlgebraError):
    def __init__(self, message: str) -> None:
        super().__init__(AlgebraErrorType.VARIABLE_INDEX, message)


class InvalidRingError(AlgebraError):
    def __init__(self, message: str) -> None:
        super().__init__(AlgebraErrorType.INVALID_RING, message)


class NotAUnitError(AlgebraError):
    def __init__(self, message: str) -> None:
        super().__init__(AlgebraErrorType.NOT_A_UNIT, message)


class HypothesisViolation(AlgebraError):
    def __init__(self, hypothesis: str, message: str) -> None:
        super().__init__(AlgebraErrorType.HYPOTHESIS_VIOLATION, message)
        self.hypothesis = hypothesis


class TheoremViolation(AlgebraError):
    def __init__(self, theorem: str, message: str) -> None:
        super().__init__(AlgebraErrorType.THEOREM_VIOLATION, message)
        self.theorem = theorem


class InternalContradiction(AlgebraError):
    def __init__(self, message: str) -> None:
        super().__init__(AlgebraErrorType.INTERNAL_CONTRADICTION, message)


class PolyParseError(AlgebraError):
    def __init__(self, message: str, position: int, raw_error: Exception | None = None) -> None:
        super().__init__(AlgebraErrorType.PARSE, f"{message} (at position {position})", raw_error)
        self.position = position


class InputFormatError(AlgebraError):
    def __init__(self, message: str, raw_error: Exception | None = None) -> None:
        super().__init__(AlgebraErrorType.INPUT_FORMAT, message, raw_error)
