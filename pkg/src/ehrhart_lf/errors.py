"""Exception hierarchy shared by every module of the package."""


class EhrhartError(Exception):
    """Base class for all package errors."""


class DimensionError(EhrhartError, ValueError):
    """Shapes or dimensions do not fit the operation."""


class GeneralPositionError(EhrhartError, ValueError):
    """A determinant that must be nonzero for points in general position vanished."""

    def __init__(self, message, subset=None):
        super().__init__(message)
        self.subset = subset


class NotLatticeFaceError(EhrhartError, ValueError):
    """The input fails the lattice-face conditions."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(EhrhartError, RuntimeError):
    """An enumeration or grid scan would exceed its iteration budget."""


class ParseError(EhrhartError, ValueError):
    """A polytope document could not be parsed; ``location`` names the field."""

    def __init__(self, message, location=""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
