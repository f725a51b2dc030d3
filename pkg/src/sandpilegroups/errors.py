"""Exception types raised across the package."""


class SandpileError(Exception):
    """Base class for all errors raised by this package."""


class SelfLoopError(SandpileError, ValueError):
    pass


class OutOfRangeError(SandpileError, IndexError):
    pass


class TooSmallError(SandpileError, ValueError):
    pass


class TooLargeError(SandpileError, ValueError):
    pass


class DisconnectedError(SandpileError, ValueError):
    """The graph is not connected, so its critical group would be infinite."""


class NotSquareError(SandpileError, ValueError):
    pass


class InvalidSpecError(SandpileError, ValueError):
    pass


class EmptyArgsError(SandpileError, ValueError):
    pass


class ArityMismatchError(SandpileError, ValueError):
    pass


class ParseError(SandpileError, ValueError):
    """Malformed graph text. ``lineno`` is 1-based, or None if not line-specific."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
