"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SymtreeError(ValueError):
    """Base class for all library errors."""


class ParseError(SymtreeError):
    """Malformed edge-list input. ``line`` is 1-based, 0 when not attributable."""

    def __init__(self, message: str, line: int = 0) -> None:
        self.line = line
        prefix = f"line {line}: " if line else ""
        super().__init__(prefix + message)


class MalformedLineError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class NonContiguousError(ParseError):
    pass


class CycleError(ParseError):
    pass


class DisconnectedError(ParseError):
    pass


class LimitExceeded(SymtreeError):
    """A brute-force routine was asked to handle a graph beyond its configured cap."""


class BudgetExceeded(SymtreeError):
    """A construction would exceed its size budget."""


class NotASpiderError(SymtreeError):
    pass


class UnsupportedError(SymtreeError):
    pass
