"""Exception types shared across the package."""

from __future__ import annotations


class MissingEdge(ValueError):
    """Operation named an edge the graph does not contain."""


class BadVertex(ValueError):
    """Vertex index out of range."""


class BadVertices(ValueError):
    """A gluing named invalid or coinciding vertices."""


class SizeExceeded(ValueError):
    """Graph larger than the configured vertex bound."""


class DimensionExceeded(ValueError):
    """Cycle-space dimension above the configured cap."""


class NotACycle(ValueError):
    """Edge set is not a member of the cycle space (odd-degree vertex)."""


class ModelInvalid(ValueError):
    """Minor model violates one of its structural invariants."""


class NotK33(ValueError):
    """Host graph is not isomorphic to K_{3,3}."""


class NotATriangle(ValueError):
    """The three vertices do not span a triangle."""


class NotDegree3(ValueError):
    """Wye-delta pivot vertex does not have degree exactly 3."""


class WouldCreateParallel(ValueError):
    """Wye-delta exchange would create a parallel edge."""


class MarksNotIndependent(ValueError):
    """Marked vertices must be pairwise non-adjacent."""


class ObstructionDataMissing(ValueError):
    """Projective-plane obstruction dataset was not supplied."""


class ParseError(ValueError):
    """Malformed graph input."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class DuplicateEdge(ParseError):
    """Edge listed more than once."""


class LoopEdge(ParseError):
    """Edge joins a vertex to itself."""
