"""Exception hierarchy shared by every module."""


class SclError(Exception):
    """Base class for all errors raised by this package."""


class UnknownGenerator(SclError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class MalformedCount(SclError, ValueError):
    pass


class IndexOutOfRange(SclError, IndexError):
    pass


class OddLength(SclError, ValueError):
    pass


class NotNull(SclError, ValueError):
    """The word does not represent the identity."""


class InvalidSpec(SclError, ValueError):
    pass


class InvalidAlphabet(SclError, ValueError):
    pass


class ResourceError(SclError):
    """A configured search limit was hit; the answer is unknown, not wrong."""


class RadiusExhausted(ResourceError):
    pass


class CapExceeded(ResourceError):
    pass
