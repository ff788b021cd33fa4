"""Exception hierarchy shared by every module of the package."""


class CrossCountryError(Exception):
    pass


class GraphError(CrossCountryError):
    pass


class DuplicateEdge(GraphError):
    pass


class ShapeMismatch(CrossCountryError):
    pass


class IllegalEndpoint(GraphError):
    pass


class VertexEliminated(GraphError):
    pass


class NotIntermediate(GraphError):
    pass


class AlreadyEliminated(GraphError):
    pass


class InvalidCode(CrossCountryError):
    pass


class UnsupportedPattern(CrossCountryError):
    pass


class OrderError(CrossCountryError):
    pass


class IncompleteOrder(OrderError):
    pass


class DuplicateVertex(OrderError):
    pass


class GraphAlreadyModified(CrossCountryError):
    pass


class MaskedAction(CrossCountryError):
    pass


class LogOfNonNegative(CrossCountryError):
    pass


class TooLarge(CrossCountryError):
    pass


class ProgramError(CrossCountryError):
    pass


class ShapeError(ProgramError):
    pass


class UnsupportedOp(ProgramError):
    pass


class UnknownTask(CrossCountryError):
    pass


class InvalidConfig(CrossCountryError):
    pass


class DomainError(CrossCountryError):
    pass
