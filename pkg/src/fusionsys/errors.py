"""Exception types shared across the package.

Every error the package raises deliberately derives from :class:`EngineError`,
so callers can catch one base class. The CLI maps these onto exit codes.
"""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(EngineError):
    """Malformed or inconsistent input.

    Raised for non-bijective image tuples, degree mismatches, subgroups
    compared across different parent groups, unknown builtin names, corpus
    files whose stated facts do not match the constructed group, and so on.
    """


class CapacityError(EngineError):
    """A configured cap (group order, degree, or subgroup count) was exceeded."""

    def __init__(self, message: str, *, cap_name: str = "", cap_value: int = 0,
                 reached: int = 0):
        super().__init__(message)
        self.cap_name = cap_name
        self.cap_value = cap_value
        self.reached = reached


class PreconditionError(EngineError):
    """A mathematical precondition of the requested operation does not hold.

    The message says which hypothesis failed and, where there is one, how to
    repair the call (e.g. pass a fully normalized representative instead).
    """


class UnsupportedCaseError(EngineError):
    """The construction is only implemented for a restricted case."""
