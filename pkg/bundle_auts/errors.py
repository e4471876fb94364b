class BundleAutsError(Exception):
    """Base class for every error raised by bundle-auts."""

    exit_code = 1


class MalformedInputError(BundleAutsError, ValueError):
    """A word, element or endomorphism literal could not be read."""

    exit_code = 2


class UnsupportedContextError(BundleAutsError, ValueError):
    """The requested (g, k) context or algorithm is not available."""

    exit_code = 3


class ContextMismatchError(BundleAutsError, ValueError):
    pass


class NotInCenterError(BundleAutsError, ValueError):
    pass


class PreconditionError(BundleAutsError, ValueError):
    pass


class ResourceLimitError(BundleAutsError, RuntimeError):
    pass


class ConfigurationError(BundleAutsError, ValueError):
    pass
