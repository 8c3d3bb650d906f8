"""Exception hierarchy."""


class YBError(ValueError):
    """Base class for all library errors."""


class FieldMismatchError(YBError, TypeError):
    pass


class DimensionError(YBError):
    pass


class SingularMatrixError(YBError):
    """Raised by exact inversion; the operator cannot be a YB operator."""


class StructureError(YBError):
    """Malformed or invalid algebra data."""


class UnknownCatalogEntry(YBError, KeyError):
    pass


class NotYangBaxter(YBError):
    pass


class NonInvertibleColor(YBError):
    pass


class NonInvertibleSpectral(YBError):
    pass


class ZNotCentral(YBError):
    pass


class ZNotEvenDegree(YBError):
    pass


class ZNotHomogeneous(YBError):
    pass


class BetaZero(YBError):
    pass


class BracketUnitNonzero(YBError):
    pass


class QZero(YBError):
    pass
