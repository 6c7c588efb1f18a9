"""Exception types shared across the package."""


class DomapError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(DomapError):
    """A word, table, or matrix has the wrong length or shape."""


class DomainError(DomapError):
    """An argument is outside the valid range (rank, weight, parameter)."""


class ConversionError(DomapError):
    """A descendant-array pair cannot be converted to a mapping."""


class ConstructionError(DomapError):
    """A recursive construction produced inconsistent intermediate data."""


class DegenerateError(DomapError):
    """An operation was applied to a parameter set it cannot shrink."""


class ResourceError(DomapError):
    """An instance exceeds the configured enumeration or memory budget."""


class ParseError(DomapError):
    """A mapping file is malformed."""


class DecodeError(DomapError):
    """A word is not in the image of the mapping being decoded."""
