"""Exception types shared across the package."""


class CausalStatesError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(CausalStatesError):
    pass


class UnknownSymbol(CausalStatesError):
    def __init__(self, position, token):
        self.position = position
        self.token = token
        super().__init__(f"unknown symbol {token!r} at position {position}")


class IoError(CausalStatesError):
    pass


class LmaxTooLargeForData(CausalStatesError):
    pass


class WordTooLong(CausalStatesError):
    pass


class UndefinedMorph(CausalStatesError):
    pass


class LmaxMismatch(CausalStatesError):
    pass


class NoRecurrentStates(CausalStatesError):
    pass


class NondeterministicInput(CausalStatesError):
    pass


class Reducible(CausalStatesError):
    """Raised when a state chain has more than one closed communicating class.

    Carries one stationary distribution per closed class in
    ``class_distributions``: a list of (state indices, probabilities) pairs.
    """

    def __init__(self, class_distributions):
        self.class_distributions = class_distributions
        super().__init__(
            f"state chain is reducible ({len(class_distributions)} closed classes)"
        )


class MismatchedSupport(CausalStatesError):
    pass


class BadParameter(CausalStatesError):
    pass


class DepthTooLargeForData(CausalStatesError):
    pass


class LmaxBelowSynchronization(CausalStatesError):
    pass
