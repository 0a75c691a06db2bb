"""Exception types shared across crossguard modules."""


class CrossguardError(Exception):
    """Base class for all crossguard-specific errors."""


class ValidationError(CrossguardError, ValueError):
    """A value violated a schema or domain invariant.

    ``field`` names the offending field when known, e.g.
    ``trains[0].velocity_m_s``.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class EmptySampleError(CrossguardError, ValueError):
    """Metric requested over an empty sample (zero total count)."""


class OrderingError(CrossguardError, ValueError):
    """Timestamps arrived out of order for a single source or consumer."""


class ParseError(CrossguardError, ValueError):
    """A wire-protocol record could not be decoded."""


class EstimateUnavailableError(CrossguardError, ValueError):
    """An operation needed a finite ETA but none was available."""


class TransportError(CrossguardError, RuntimeError):
    """A notification transport failed to deliver a message."""
