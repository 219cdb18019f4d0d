"""Exception hierarchy shared by the library and the command-line tool."""


class FactorizationError(Exception):
    """Base class for every error raised by this package."""


class AlphabetError(FactorizationError, ValueError):
    """A symbol is not admissible under the active alphabet, or the alphabet is malformed."""

    def __init__(self, message, offset=None, symbol=None):
        super().__init__(message)
        self.offset = offset
        self.symbol = symbol


class EmptyWordError(FactorizationError, ValueError):
    """An operation defined only on nonempty words received the empty word."""


class ContractError(FactorizationError, ValueError):
    """A precondition of an operation does not hold for its arguments."""


class ResourceLimitError(FactorizationError):
    """An exhaustive (exponential or brute-force) routine was asked to exceed its cap."""
