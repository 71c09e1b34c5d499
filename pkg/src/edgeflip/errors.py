"""Exception hierarchy. Every error carries a stable ``kind`` used by the CLI."""


class EdgeFlipError(Exception):
    kind = "Error"


class NotSimple(EdgeFlipError):
    kind = "NotSimple"


class NotConnected(EdgeFlipError):
    kind = "NotConnected"


class EmptyVertexSet(EdgeFlipError):
    kind = "EmptyVertexSet"


class SizeLimit(EdgeFlipError):
    kind = "SizeLimit"


class DimensionMismatch(EdgeFlipError):
    kind = "DimensionMismatch"


class VertexOutOfRange(EdgeFlipError):
    kind = "VertexOutOfRange"


class EdgeOutOfRange(EdgeFlipError):
    kind = "EdgeOutOfRange"


class NotInBond(EdgeFlipError):
    kind = "NotInBond"


class NotAVertexCutImage(EdgeFlipError):
    kind = "NotAVertexCutImage"


class DegreeTooSmall(EdgeFlipError):
    kind = "DegreeTooSmall"


class SameVertex(EdgeFlipError):
    kind = "SameVertex"


class CapExceeded(EdgeFlipError):
    kind = "CapExceeded"


class InvalidDescriptor(EdgeFlipError):
    kind = "InvalidDescriptor"


class InvalidSpec(EdgeFlipError):
    kind = "InvalidSpec"


class ParseError(EdgeFlipError):
    kind = "ParseError"
