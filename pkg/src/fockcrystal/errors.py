"""Exception types.  Everything a caller can trigger with bad input is a ValueError."""

from __future__ import annotations


class CrystalError(ValueError):
    """Domain error: the inputs are well formed but violate a precondition."""


class InvalidNodeError(CrystalError):
    pass


class InvalidLevelError(CrystalError):
    pass


class NotUglovError(CrystalError):
    """The multipartition is not in the connected component of the empty one."""


class OrbitMismatchError(CrystalError):
    pass


class NotApplicableError(CrystalError):
    """A characterization was asked for outside the hypothesis it is valid under."""


class UndefinedStepError(CrystalError):
    """A Kashiwara operator returned 0 in the middle of a path replay."""


class ParseError(ValueError):
    def __init__(self, message: str, column: int | None = None, line: int = 1):
        super().__init__(message if column is None else f"line {line}, column {column}: {message}")
        self.column = column
        self.line = line
