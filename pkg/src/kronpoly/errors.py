"""Exception hierarchy shared by the library and the CLI."""


class KronError(Exception):
    """Base class for all library errors."""


class InputError(KronError, ValueError):
    """Malformed or inconsistent input (bad partition, size mismatch, ...)."""


class SizeLimitError(KronError):
    """A computation would exceed the configured oracle budget."""


class IntegralityError(KronError, AssertionError):
    """An exact quantity that must be an integer came out fractional.

    This always signals a bug, never bad input.
    """


class NotAdditiveError(KronError, ValueError):
    """The operation needs an additive tableau (a pointed weight cone)."""
