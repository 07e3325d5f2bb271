"""Exception types shared across the package."""


class HyperturanError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(HyperturanError, ValueError):
    pass


class UnsupportedSize(HyperturanError):
    """Instance too large for an exhaustive routine."""


class ResourceLimit(HyperturanError):
    """An enumeration budget would be exceeded."""


class ParseError(HyperturanError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
