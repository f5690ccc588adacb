"""Exception types shared across the package."""


class GarsideError(Exception):
    """Base class for all errors raised by this package."""


class IncompatibleError(GarsideError, ValueError):
    """Operands come from different instances or have different degrees."""


class MalformedError(GarsideError, ValueError):
    """Input is not a well-formed partition, permutation, word, ..."""


class ResourceLimitError(GarsideError, RuntimeError):
    """A configured size or step bound was exceeded."""


class UnsupportedInstanceError(GarsideError):
    """The operation needs a Garside element and the instance has none."""


class ParseError(MalformedError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
