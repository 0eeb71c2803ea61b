"""Exception hierarchy shared by every module."""
from __future__ import annotations


class ResolveDimError(Exception):
    """Base class for all package errors."""


class GraphError(ResolveDimError, ValueError):
    """Invalid graph input."""


class Disconnected(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class BadCertificate(GraphError):
    pass


class MissingCertificate(ResolveDimError, ValueError):
    pass


class DomainError(ResolveDimError, ValueError):
    """A parameter lies outside the domain an operation is defined on."""


class BudgetExceeded(ResolveDimError, RuntimeError):
    """A search hit its node budget before reaching a decision."""

    def __init__(self, message: str, nodes: int | None = None):
        super().__init__(message)
        self.nodes = nodes


class TooLarge(ResolveDimError, ValueError):
    pass


class DegeneracyViolated(ResolveDimError, ValueError):
    pass


class ConstructionError(ResolveDimError):
    """A bound construction could not produce a valid set."""


class NotHamiltonianCycle(ConstructionError, ValueError):
    pass


class ImproperColoring(ConstructionError, ValueError):
    pass


class NotOuterplanar(ConstructionError, ValueError):
    pass


class NotMaximalPlanar(ConstructionError, ValueError):
    pass


class ColoringNotFound(ConstructionError):
    pass


class VerificationFailed(ConstructionError):
    """The constructed set does not resolve the graph.

    ``witness`` is a pair of vertices with identical distance vectors.
    """

    def __init__(self, message: str, witness: tuple[int, int] | None = None,
                 members: list[int] | None = None):
        super().__init__(message)
        self.witness = witness
        self.members = members


class BoundExceeded(ConstructionError):
    """The constructed set resolves the graph but is larger than the claimed bound."""

    def __init__(self, message: str, size: int, bound: int, members: list[int] | None = None):
        super().__init__(message)
        self.size = size
        self.bound = bound
        self.members = members


class RepairFailed(ConstructionError):
    def __init__(self, message: str, best: list[int] | None = None):
        super().__init__(message)
        self.best = best
