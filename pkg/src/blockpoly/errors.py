"""Exception hierarchy for blockpoly."""

from typing import Optional


class BlockPolyError(Exception):
    """Base class for every error raised by blockpoly."""


class DimensionError(BlockPolyError):
    """Input matrix is not square, or its rows are ragged."""


class DomainError(BlockPolyError):
    """A precondition of an operation does not hold for the given input."""


class SizeError(BlockPolyError):
    """An oracle was asked for an order above its hard cap."""


class ConfigError(BlockPolyError):
    """Unsupported command, engine, format or mode combination."""


class ModeError(ConfigError):
    """Exact integer mode requested for a matrix with non-integer entries."""


class MatrixFormatError(BlockPolyError):
    """Matrix file could not be parsed.

    Carries the 1-based line and column of the offending input.
    """

    def __init__(self, message: str, line: int = 1, column: int = 1, path: Optional[str] = None):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        super().__init__(f"Line {line}, Column {column}: {message}")
