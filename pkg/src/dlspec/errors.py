"""Exception hierarchy shared by every module."""


class DLSpecError(Exception):
    pass


class GraphError(DLSpecError, ValueError):
    pass


class EdgeExists(GraphError):
    pass


class EdgeAbsent(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class VertexOutOfRange(GraphError, IndexError):
    pass


class Disconnected(GraphError):
    pass


class TooLarge(DLSpecError, ValueError):
    pass


class MalformedGraph6(DLSpecError, ValueError):
    pass


class BadOrder(DLSpecError, ValueError):
    pass


class BadParams(DLSpecError, ValueError):
    pass


class DegreeTooSmall(BadParams):
    pass


class DimensionMismatch(DLSpecError, ValueError):
    pass


class ZeroVector(DLSpecError, ValueError):
    pass


class NoConvergence(DLSpecError, ArithmeticError):
    pass


class PreconditionViolated(DLSpecError, ValueError):
    pass


class UnknownLemma(DLSpecError, KeyError):
    pass


class ParseError(DLSpecError, ValueError):
    pass
