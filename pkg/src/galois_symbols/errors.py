"""Exception hierarchy shared by every module of the package."""


class SymbolError(Exception):
    """Base class for all errors raised by galois_symbols."""


class InvalidBase(SymbolError, ValueError):
    pass


class NonCoprimeModulus(SymbolError, ValueError):
    pass


class ArityMismatch(SymbolError, ValueError):
    pass


class TowerMismatch(SymbolError, ValueError):
    pass


class DegreeMismatch(SymbolError, ValueError):
    pass


class NotFullCalculus(SymbolError, ValueError):
    """The tower does not contain the m-th roots of unity (m does not divide q - 1)."""


class NotDescendable(SymbolError, ValueError):
    pass


class NotLiftable(SymbolError, ValueError):
    pass


class InnerUniformizer(SymbolError, ValueError):
    pass


class NonMonomialEntry(SymbolError, ValueError):
    pass


class IdentityFailure(SymbolError, AssertionError):
    """A symbolic identity that must hold did not; always a bug."""


class HypothesisError(SymbolError, ValueError):
    """The cohomological-dimension hypothesis behind a reduction is not met."""


class NotTopDegree(SymbolError, ValueError):
    pass


class NotComposite(SymbolError, ValueError):
    pass


class MixedDegrees(SymbolError, ValueError):
    pass


class GcdFailure(SymbolError, ValueError):
    pass


class PreconditionError(SymbolError, ValueError):
    pass


class ZeroInput(SymbolError, ValueError):
    pass


class ModulusMismatch(SymbolError, ValueError):
    pass


class ReciprocityViolation(SymbolError, AssertionError):
    pass


class ParseError(SymbolError, ValueError):
    def __init__(self, message, column):
        super().__init__(f"{message} at column {column}")
        self.column = column


class UnknownGenerator(SymbolError, ValueError):
    pass


class DegreeOverflowWarning(UserWarning):
    """A symbol sum above the top degree was normalized (to zero)."""
