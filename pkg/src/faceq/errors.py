"""Shared exception types.

Parse failures and unsupported input shapes get their own classes so the
command line layer can map them to distinct exit codes.
"""


class ParseError(ValueError):
    """Malformed input document (quiver, relations, coaction, ...)."""


class UnsupportedShapeError(ValueError):
    """Structurally valid input that the library deliberately refuses."""


class VerificationError(RuntimeError):
    """A construction refused to proceed because a prerequisite check failed.

    Carries the offending report so callers can surface the witness.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
