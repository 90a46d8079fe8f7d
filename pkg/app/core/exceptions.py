# File: app/core/exceptions.py
# Path: hopfbench/app/core/exceptions.py

from typing import Optional

class AlgebraError(Exception):
    """Base class for every error raised by the algebra modules"""

class InvalidArgumentError(AlgebraError, ValueError):
    """An argument violates an operation's precondition"""

class DivergentSeriesError(AlgebraError, ValueError):
    """A multiple zeta series was requested for a non-admissible index"""

    def __init__(self, message: str, term: Optional[str] = None):
        super().__init__(message)
        self.term = term

class ParseError(AlgebraError):
    """
    Malformed element text. Keeps the input and the 0-based position
    of the offending character so callers can point at it.
    """

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.reason = message
        self.text = text
        self.position = position
        super().__init__(self.annotated())

    def annotated(self) -> str:
        if not self.text:
            return self.reason
        return f"{self.reason} at position {self.position}\n  {self.text}\n  {' ' * self.position}^"
