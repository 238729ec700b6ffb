"""Exception types shared across the package."""


class StockSpringError(Exception):
    """Base class for all package errors."""


class GeometryError(StockSpringError):
    """Catalogue entry is physically inconsistent (bad coil geometry)."""


class RangeError(StockSpringError):
    """Length or load argument outside the physically usable range."""


class SpecError(StockSpringError):
    """Requirement sheet cannot be normalized; message names the field."""


class FormatError(StockSpringError):
    """Catalogue stream is unreadable (missing or malformed header)."""


class EmptyCatalogueError(StockSpringError):
    """No catalogue entry survives the hard material/ends filters."""


class DegenerateError(StockSpringError):
    """Objective comparison attempted on a degenerate (all-zero) pair."""
