"""Error taxonomy shared by the library, the command line and the HTTP surface."""


class ElicitError(Exception):
    """Base class for every error raised on purpose by this package"""


class InvalidArgumentError(ElicitError, ValueError):
    """A precondition on an argument does not hold"""


class QueryTooLargeError(ElicitError, ValueError):
    """A query exceeded the session's maximum size"""

    def __init__(self, size: int, max_size: int):
        self.size = size
        self.max_size = max_size
        super().__init__(f"query of size {size} exceeds the session limit t={max_size}")


class NotComputableError(ElicitError, ValueError):
    """The scoring vector is outside R_{m,t}; no t-query algorithm computes it"""


class RefusedError(ElicitError):
    """The request exceeds a configured desk-scale cap"""
