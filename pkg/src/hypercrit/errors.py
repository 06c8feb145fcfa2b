"""Exception types shared across the package."""


class HypercritError(Exception):
    """Base class for all package-specific errors."""


class MixedContextError(HypercritError):
    """Operands belong to different field contexts."""


class CharacteristicTooSmallError(HypercritError):
    """The field characteristic is too small for a multiplicity-safe operation."""


class InvarianceError(HypercritError):
    """A polynomial fails the required signed-permutation invariance."""


class PositiveDimensionalError(HypercritError):
    """The saturated system has infinitely many solutions."""


class SeparatingFormError(HypercritError):
    """No separating linear form was found within the retry budget."""


class NotFiberConstantError(HypercritError):
    """The pushforward map is not constant on the fibers of the chosen form."""


class DuplicateMismatchError(HypercritError):
    """Two same-type entries parametrize different point sets (upstream bug)."""


class TruncationError(HypercritError):
    """A constraint became identically zero after truncation."""
