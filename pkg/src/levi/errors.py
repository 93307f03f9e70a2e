"""Exception hierarchy shared by every module."""


class LeviError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(LeviError, ValueError):
    pass


class NotSimple(GraphError):
    pass


class NotCubic(GraphError):
    pass


class DisconnectedInput(GraphError):
    pass


class NotTwoRegular(GraphError):
    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree} in the edge subset (expected 2)")
        self.vertex = vertex
        self.degree = degree


class NoBipartition(GraphError):
    pass


class InvalidParameter(LeviError, ValueError):
    pass


class NotLinear(LeviError, ValueError):
    pass


class GirthTooSmall(LeviError, ValueError):
    pass


class BipartitenessBroken(LeviError, ValueError):
    pass


class NotPerfectMatching(LeviError, ValueError):
    pass


class InvalidSite(LeviError, ValueError):
    pass


class PostconditionViolated(LeviError, RuntimeError):
    pass


class InvalidReduction(LeviError, ValueError):
    """A reduction rewrite failed; ``clause`` is one of
    ``multi-edge``, ``regularity``, ``girth``, ``disconnected``."""

    def __init__(self, clause: str, detail: str = ""):
        super().__init__(f"{clause}: {detail}" if detail else clause)
        self.clause = clause


class MissingJunctionEdge(LeviError, ValueError):
    def __init__(self, junction: int, a: int, b: int):
        super().__init__(f"junction {junction}: no edge between {a} and {b}")
        self.junction = junction
        self.endpoints = (a, b)


class VertexReuse(LeviError, ValueError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} used twice")
        self.vertex = vertex


class TemplateInvalid(LeviError, ValueError):
    pass


class OutOfRange(LeviError, ValueError):
    pass


class ParseError(LeviError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
