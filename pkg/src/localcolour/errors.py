"""Exception hierarchy shared by every module.

Domain errors derive from :class:`LocalColourError`; the CLI prints their
class name on a single ``error:`` line and exits with status 1.
"""


class LocalColourError(Exception):
    """Base class for all domain errors."""


class ParseError(LocalColourError):
    pass


class MissingEdgeColour(LocalColourError):
    def __init__(self, edge):
        super().__init__(f"host edge {edge} has no colour")
        self.edge = edge


class IllegalEdge(LocalColourError):
    def __init__(self, edge, reason="not a host edge"):
        super().__init__(f"edge {edge}: {reason}")
        self.edge = edge


class InvalidColour(LocalColourError):
    pass


class UnknownColour(LocalColourError):
    def __init__(self, colour):
        super().__init__(f"colour {colour} does not appear")
        self.colour = colour


class EmptyGraph(LocalColourError):
    pass


class NoEdges(LocalColourError):
    pass


class BudgetExceeded(LocalColourError):
    def __init__(self, size, budget, what="search"):
        super().__init__(f"{what}: size {size} exceeds budget {budget}")
        self.size = size
        self.budget = budget


class SubroutineBudgetExceeded(BudgetExceeded):
    pass


class NotSimple(LocalColourError):
    pass


class NotTwoLocal(LocalColourError):
    pass


class NotRLocal(LocalColourError):
    pass


class NotBalancedBipartite(LocalColourError):
    pass


class TooManyColours(LocalColourError):
    pass


class StructureViolation(LocalColourError):
    """A simple 2-local colouring of K_{n,n} did not fit either known shape."""


class ComponentsDoNotCover(LocalColourError):
    pass


class PreconditionViolated(LocalColourError):
    pass


class InconsistentBlocks(LocalColourError):
    pass


class TheoremViolation(LocalColourError):
    """A check produced an outcome that a proven bound rules out."""
