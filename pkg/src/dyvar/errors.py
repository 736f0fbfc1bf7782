"""Exception types shared across the package."""


class DyvarError(Exception):
    """Base class for all errors raised by this package."""


class LevelOverflowError(DyvarError):
    """The base cube has no dyadic parent."""


class FormatError(DyvarError):
    """A grid or cube-list file is malformed."""


class UndefinedValueError(DyvarError):
    """A cell is covered by no admissible cube and pointwise values are off."""


class UnsaturatedFamilyError(DyvarError):
    """A cube family misses an upward-closure cube required by decompositions."""


class DegenerateDenominatorError(DyvarError):
    """A boundary-count denominator is zero where a ratio was requested."""


class PreconditionError(DyvarError):
    """An operation's mathematical precondition does not hold for the input."""
