"""Exception types raised across the package."""


class StrongGenusError(Exception):
    pass


class GraphFormatError(StrongGenusError, ValueError):
    """Malformed graph, embedding, cycle or certificate text."""


class LoopRejected(GraphFormatError):
    pass


class DegenerateCycle(StrongGenusError):
    """Suppressing degree-2 vertices of a bare cycle would leave a loop."""


class InvalidEmbedding(StrongGenusError, ValueError):
    pass


class OddCharacteristicOrientable(StrongGenusError):
    pass


class SameVertex(StrongGenusError, ValueError):
    pass


class LayeringDegenerate(StrongGenusError):
    pass


class InvalidCycle(StrongGenusError, ValueError):
    pass


class ExtractionFailed(StrongGenusError):
    pass


class InvalidParameter(StrongGenusError, ValueError):
    pass


class OddGirthUnsupported(StrongGenusError, ValueError):
    pass
