"""Error types shared across the package.

Every reported failure is an explicit exception; arithmetic never wraps
around silently and out-of-domain inputs never produce garbage values.
"""

from __future__ import annotations


class HofgError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HofgError):
    """Input is outside the function's documented domain."""


class RankOverflow(HofgError):
    """A Fibonacci rank outside the fixed table (0..91) was required."""


class ValueOverflow(HofgError):
    """A checked integer operation left the supported value range."""


class ParseError(HofgError):
    """A b-file line is malformed. Carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class GapError(HofgError):
    """B-file indices are not consecutive."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DepthLimit(HofgError):
    """A tree slice deeper than the supported maximum was requested."""
