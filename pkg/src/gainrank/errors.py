"""Exception hierarchy shared by every gainrank module."""


class GainRankError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGain(GainRankError):
    """A gain value is non-finite or too far from the unit circle."""


class GainMismatch(GainRankError):
    """An edge/gain assignment does not fit the target graph."""


class TooSmall(GainRankError):
    """A cycle was requested with fewer than three vertices."""


class InvalidBase(GainRankError):
    """Parameters do not describe a valid two-cycle base shape."""


class UnknownCatalogId(GainRankError):
    """Catalog identifier outside G1..G22."""


class VertexOutOfRange(GainRankError):
    """A vertex label falls outside 1..n."""


class NotHermitian(GainRankError):
    """Matrix input deviates from Hermitian symmetry beyond tolerance."""


class NoConvergence(GainRankError):
    """Eigenvalue iteration exhausted its sweep budget."""


class InternalInconsistency(GainRankError):
    """Cross-checked computations disagree; indicates a bug, not bad input."""


class NotACycle(GainRankError):
    """A vertex sequence does not trace a closed simple cycle."""


class NotAPendant(GainRankError):
    """Vertex pair is not a pendant vertex with its unique neighbor."""


class NotBicyclic(GainRankError):
    """Graph does not satisfy the bicyclic edge-count condition."""


class NotConnected(GainRankError):
    """Operation requires a connected graph."""


class TypeParityError(GainRankError):
    """Cycle type is incompatible with the parity of the cycle length."""


class NotInCatalog(GainRankError):
    """Graph does not match any stored catalog labeling."""


class HasTwins(GainRankError):
    """Graph contains pendant twins where none are allowed."""


class UnknownClaim(GainRankError):
    """Verification claim identifier is not registered."""


class ParseError(GainRankError):
    """Malformed gain-graph file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
