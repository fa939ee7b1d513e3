"""Exception hierarchy shared by every module of the package."""


class GFTError(Exception):
    """Base class for all errors raised by gftkit."""


class DomainError(GFTError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class ParameterError(DomainError):
    """Class or operator parameters violate their range constraints."""


class FormError(GFTError, TypeError):
    """A series is in the wrong sign form for the requested operation."""


class ConditionFailed(GFTError):
    """A side condition required by a theorem does not hold.

    ``details`` carries whatever the caller may still want to inspect
    (for instance bounds that were computed but are unproven).
    """

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details


class NumericalDegeneracy(GFTError):
    """Base for degenerate weights and vanishing denominators."""


class DegenerateWeight(NumericalDegeneracy):
    pass


class DegenerateDenominator(NumericalDegeneracy):
    pass


class ZeroDenominator(NumericalDegeneracy):
    """A denominator vanishes at a sample point; ``where`` holds the point."""

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where
