"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SquareSwitchError(Exception):
    """Base class for all errors raised by this package."""


class PathError(SquareSwitchError, ValueError):
    """An edge set or move string does not describe an s,t Hamiltonian path."""


class BadShape(PathError):
    pass


class DegreeViolation(PathError):
    pass


class Disconnected(PathError):
    pass


class WrongEndpoints(PathError):
    pass


class OutOfBounds(PathError):
    pass


class Revisit(PathError):
    pass


class WrongTerminal(PathError):
    pass


class ParseError(SquareSwitchError, ValueError):
    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NotSimple(SquareSwitchError, ValueError):
    pass


class NoSimplePath(SquareSwitchError, ValueError):
    """Both grid dimensions are even, so no s,t Hamiltonian path exists."""


class NotCanonical(SquareSwitchError, ValueError):
    pass


class NoSuchCanonical(SquareSwitchError, ValueError):
    pass


class DimsMismatch(SquareSwitchError, ValueError):
    pass


class NotSwitchable(SquareSwitchError):
    pass


class StructureViolation(SquareSwitchError, AssertionError):
    """A structural property the zip relies on does not hold for the input."""


class FrameUnavailable(SquareSwitchError):
    pass


class NotAlmostCanonical(SquareSwitchError, ValueError):
    pass


class ReplayDivergence(SquareSwitchError):
    pass


class CapExceeded(SquareSwitchError, ValueError):
    pass
