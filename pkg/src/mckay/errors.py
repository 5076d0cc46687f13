"""Exception hierarchy; each class carries the CLI exit code it maps to."""


class McKayError(Exception):
    exit_code = 5


class SpecSyntaxError(McKayError, ValueError):
    """Malformed input text (spec files, table files, encoded numbers)."""

    exit_code = 2


class SemanticError(McKayError, ValueError):
    """Well-formed input that violates a mathematical precondition."""

    exit_code = 3


class ConvergenceError(McKayError, RuntimeError):
    exit_code = 4


class InvariantViolation(McKayError, AssertionError):
    """An internal consistency check failed; indicates a bug or corrupt data."""

    exit_code = 5
