"""Exception types shared across the package."""

from __future__ import annotations


class ResourceLimitError(Exception):
    """Base class for refusals to start work that exceeds a configured bound."""


class SizeLimitError(ResourceLimitError):
    """An input set is larger than the enumeration bound."""


class WorkLimitError(ResourceLimitError):
    """A brute-force scan would exceed the work bound."""


class GraphParseError(ValueError):
    """Invalid graph text; carries 1-based line and column of the offence."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnboundedFlowError(ValueError):
    """The flow network admits no finite cut separating source from sink."""
