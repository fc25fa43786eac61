"""Exception types. Every domain error is a ``ValueError`` subclass."""


class CyclopError(ValueError):
    """Base class for all domain errors raised by this package."""


class MalformedPartition(CyclopError):
    pass


class GroundSetMismatch(CyclopError):
    pass


class NotAVertexLabel(CyclopError):
    pass


class GroundSetTooSmall(CyclopError):
    pass


class UnsupportedFormat(CyclopError):
    pass


class ImproperDirection(CyclopError):
    pass


class NotARefinement(CyclopError):
    pass


class UnrealizableLabel(CyclopError):
    """Internal failure: a constructed direction did not reproduce its label."""


class DegenerateLinkage(CyclopError):
    pass


class NotClosable(CyclopError):
    pass


class ParallelEdges(CyclopError):
    pass


class DegeneratePolygon(CyclopError):
    pass
