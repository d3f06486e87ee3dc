"""Exception hierarchy.

Everything raised on bad input derives from :class:`InputError`, so callers
(the CLI in particular) can separate validation failures from size-cap aborts.
"""

from __future__ import annotations


class ConvexityError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ConvexityError, ValueError):
    """Invalid graph, spec, vertex set or file."""


class GraphError(InputError):
    pass


class SelfLoopError(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRangeError(GraphError):
    def __init__(self, vertex, n: int, what: str = "vertex"):
        super().__init__(f"{what} {vertex!r} is outside 1..{n}")
        self.vertex = vertex
        self.n = n


class DisconnectedError(GraphError):
    def __init__(self, unreached: int):
        super().__init__(f"graph is disconnected: vertex {unreached} is not reachable from vertex 1")
        self.vertex = unreached


class InvalidPathError(GraphError):
    pass


class GraphParseError(GraphError):
    pass


class SpecError(InputError):
    pass


class UnknownPresetError(SpecError):
    pass


class MalformedTokenError(SpecError):
    pass


class MissingParameterError(SpecError):
    pass


class MatrixParseError(SpecError):
    pass


class MatrixShapeMismatchError(SpecError):
    pass


class AsymmetricMatrixError(SpecError):
    pass


class NonzeroDiagonalError(SpecError):
    pass


class NegativeEntryError(SpecError):
    pass


class SizeLimitExceeded(ConvexityError):
    """An exhaustive routine was asked to run above its vertex cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds the exhaustive-search cap of {cap}")
        self.n = n
        self.cap = cap
