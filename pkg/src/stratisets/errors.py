"""Exception types shared across the workbench."""


class StratisetsError(Exception):
    """Base class for all workbench errors."""


class CycleDetected(StratisetsError):
    """Transitive closure of the cover relation would violate antisymmetry."""


class NotMonotone(StratisetsError):
    """A filtration word is not weakly increasing in the poset."""


class BadIndexSet(StratisetsError):
    """Index set for a generalized horn is empty, improper, or out of range."""


class HypothesisFails(StratisetsError):
    """No index j in S has an equal filtration neighbor outside S."""


class BoundTooLow(StratisetsError):
    """The dimension bound of a participant cannot host the construction."""


class MalformedDiagram(StratisetsError):
    """Diagram arrows are not maps of the stated objects, or functoriality fails."""


class ComparisonFailed(StratisetsError):
    """A canonical comparison map failed to be an isomorphism."""

    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level


class InstanceTooLarge(StratisetsError):
    """Instance exceeds the configured enumeration ceiling."""


class LabelingViolation(StratisetsError):
    """Cell labels violate the incidence-compatibility condition."""


class BasepointOutsideSubcomplex(StratisetsError):
    """Requested basepoint is not a vertex of the chosen subcomplex."""


class ParseError(StratisetsError):
    """Input file does not conform to the JSON schemas."""


class UnknownSuite(StratisetsError):
    """Verification suite name is not known."""


class UnknownFormat(StratisetsError):
    """Export format is not known."""
