"""Exception hierarchy shared by every diaglab module."""


class DiagLabError(Exception):
    """Base class for all diaglab errors."""


class InvalidInputError(DiagLabError, ValueError):
    """Arguments violate an operation's preconditions."""


class RangeError(InvalidInputError):
    """Parameters fall outside a closed form's validity range."""


class NoCutExistsError(DiagLabError):
    """The graph admits no cut of the requested kind (e.g. complete graphs)."""


class VerificationFailedError(DiagLabError):
    """A construction failed one of its stated conditions."""


class NotApplicableError(DiagLabError):
    """A certificate's hypotheses do not hold for the instance."""


class NeedsIsolationArgumentError(NotApplicableError):
    """MM* lower bound with g < 2 requires a separate no-isolated-survivor argument."""
