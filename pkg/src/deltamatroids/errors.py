"""Exception hierarchy shared by all modules."""


class DeltaMatroidError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyFamily(DeltaMatroidError):
    """A set system would have an empty family of feasible sets."""


class MaskOutOfRange(DeltaMatroidError):
    """A subset mask has bits outside the ground set."""


class IndexOutOfRange(DeltaMatroidError):
    """An element, vertex or position index is out of range."""


class GroundSetTooLarge(DeltaMatroidError):
    """The ground set exceeds the configured bound for this operation."""


class NotSymmetric(DeltaMatroidError):
    """A matrix that must be symmetric is not."""


class SpaceMismatch(DeltaMatroidError):
    """Two vectors or subspaces live in different ambient spaces."""


class SameElement(DeltaMatroidError):
    """A move needs two distinct ground-set elements."""


class SameVertex(DeltaMatroidError):
    """A graph move needs two distinct vertices."""


class SameEdge(DeltaMatroidError):
    """The two rotation-adjacent half-edges belong to a single edge."""


class NotAdjacent(DeltaMatroidError):
    """The selected chord ends are not rotation-adjacent."""


class Disconnected(DeltaMatroidError):
    """The ribbon graph is not connected."""


class DegreeTooLarge(DeltaMatroidError):
    """The requested degree exceeds the exhaustive-enumeration cap."""


class NotBinary(DeltaMatroidError):
    """A binary delta-matroid was required and the check is enforced."""


class CoidealViolation(DeltaMatroidError):
    """The relation span is not a coideal; signals an implementation bug."""


class MissingValue(DeltaMatroidError):
    """A functional lacks a value on a required isomorphism class."""


class NotMultiplicative(DeltaMatroidError):
    """A functional that must be multiplicative is not."""


class ParseError(DeltaMatroidError):
    """A text-format input failed to parse.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
