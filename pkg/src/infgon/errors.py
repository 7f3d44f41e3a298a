"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class InfGonError(Exception):
    """Base class for every error raised by the package."""


# arcs
class ArcError(InfGonError, ValueError):
    pass


class EdgeNotArc(ArcError):
    pass


class InfiniteEndpointOnInftyGon(ArcError):
    pass


class DegenerateArc(ArcError):
    pass


# triangulation
class TriangulationError(InfGonError):
    pass


class SurfaceMismatch(TriangulationError):
    pass


class NotMember(TriangulationError):
    pass


class Crossing(TriangulationError):
    def __init__(self, message: str, arcs: tuple = ()):
        super().__init__(message)
        self.arcs = arcs


class NotMaximal(TriangulationError):
    pass


# mutation
class MutationError(InfGonError):
    pass


class NotMutable(MutationError):
    pass


class NotAdmissible(MutationError):
    def __init__(self, step: int, reason: str = ""):
        super().__init__(f"schedule not admissible at step {step}" + (f": {reason}" if reason else ""))
        self.step = step


class NotComposable(MutationError):
    pass


# completion
class CompletionError(InfGonError):
    pass


class NotFinitelyPresented(CompletionError):
    pass


class CompletionNotMaximal(CompletionError):
    pass


# oracle
class OracleError(InfGonError):
    pass


class TooLarge(OracleError):
    pass


class NotSubpolygon(OracleError):
    pass


# cli
class CliError(InfGonError):
    pass


class ParseError(CliError):
    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class ValidationError(CliError):
    pass
