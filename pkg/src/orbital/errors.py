"""Exception types shared across the package."""


class OrbitalError(Exception):
    """Base class for every error this package raises deliberately."""


# -- tableau construction and validation ------------------------------------

class TableauError(OrbitalError):
    """A candidate tableau violates standardness."""


class DuplicateEntry(TableauError):
    pass


class RowNotIncreasing(TableauError):
    pass


class ColumnNotIncreasing(TableauError):
    pass


class RaggedShape(TableauError):
    pass


class SizeMismatch(OrbitalError):
    """A partition's size disagrees with the ambient matrix size."""


class NotRichardson(OrbitalError):
    """An operation requiring a Richardson tableau got something else."""


# -- word search -------------------------------------------------------------

class BoundExceeded(OrbitalError):
    """Tableau too large for the exhaustive word search."""


# -- projections -------------------------------------------------------------

class TooSmall(OrbitalError):
    """Box removal from a tableau with at most one box."""


class BadRange(OrbitalError):
    """Projection indices outside 1 <= i <= j <= n."""


# -- polynomial layer --------------------------------------------------------

class MissingVariable(OrbitalError):
    """Evaluation point does not cover every variable."""


class NotSquare(OrbitalError):
    pass


class NotHomogeneousWeight(OrbitalError):
    """Polynomial mixes monomials of different weights."""


class ZeroPolynomial(OrbitalError):
    """The zero polynomial has no well-defined weight."""


# -- generator construction --------------------------------------------------

class BadWindow(OrbitalError):
    """Window does not satisfy 1 <= a <= b <= n or is too thin."""


class InconsistentIndexing(OrbitalError):
    """Lowest surviving t-coefficient disagrees with the predicted index."""


# -- classification and sampling ---------------------------------------------

class NotApplicable(OrbitalError):
    """Predicate asked about an input outside its domain."""


class ClassificationError(OrbitalError):
    """Internal inconsistency while matching a tableau to a descriptor."""


class NotNilpotent(OrbitalError):
    """Jordan type requested for a matrix that is not nilpotent."""


class DegenerateSample(OrbitalError):
    """Repeated sampling failed to produce a usable point."""
