"""
Errors raised by the run-length DTW toolkit.
"""

from typing import Optional


class RleDtwError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RleDtwError, ValueError):
    """An input violates a documented precondition."""


class ParseError(RleDtwError, ValueError):
    """Input text could not be parsed.

    Args:
        message: What went wrong
        line: 1-based line number in the source, when known
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
