class OneDimError(Exception):
    """Base for all library errors."""


class InvalidInputError(OneDimError, ValueError):
    """Malformed partition, weight, color, rank or word."""


class InternalArithmeticError(OneDimError):
    """Exact arithmetic produced something that cannot happen (a bug)."""


class CrystalStructureError(OneDimError):
    """A crystal computation left the expected multiplicity-free structure."""


class ReportCacheError(OneDimError):
    """Cached report unreadable or written for a different run."""
