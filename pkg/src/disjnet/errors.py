"""Exception hierarchy.  The CLI maps these onto exit codes."""


class DisjnetError(Exception):
    """Base class for every error raised by this package."""


class InputError(DisjnetError, ValueError):
    """Malformed input: out-of-range vertex, wrong length, bad parameter."""


class PreconditionError(DisjnetError, ValueError):
    """The input is well formed but the operation is not defined on it."""


class ResourceError(DisjnetError, RuntimeError):
    """A size cap was exceeded (brute-force enumeration, word overflow)."""


class OracleMismatch(DisjnetError, AssertionError):
    """A fast characterisation disagreed with the brute-force oracle."""
