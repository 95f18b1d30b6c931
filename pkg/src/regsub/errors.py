"""Exception hierarchy shared by all modules."""


class RegsubError(Exception):
    """Base class for every error raised by this package."""


class DegenerateHull(RegsubError):
    pass


class NotHullVertex(RegsubError):
    pass


class TiedAngles(RegsubError):
    pass


class PointAtInfinity(RegsubError):
    pass


class DuplicatePoint(RegsubError):
    pass


class DimensionMismatch(RegsubError):
    pass


class NotRegular(RegsubError):
    pass


class GeneralPositionRequired(RegsubError):
    pass


class ApexNotInAnyCell(RegsubError):
    pass


class InvalidDelta(RegsubError):
    pass


class InvariantError(RegsubError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class SizeLimit(RegsubError):
    pass


class OutOfRange(RegsubError):
    pass


class DuplicateParameter(RegsubError):
    pass


class RankDeficient(RegsubError):
    pass


class AntipodalPair(RegsubError):
    pass


class NotGeneric(RegsubError):
    pass


class ParseError(RegsubError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
