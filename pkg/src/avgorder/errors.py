"""Shared exception types."""


class CapExceeded(RuntimeError):
    """A configured size limit (element, lattice or isomorphism cap) was hit.

    Raised instead of silently returning a wrong or partial answer.
    """


class CriterionViolation(RuntimeError):
    """A consistency check that must hold for every valid input failed.

    These guard mathematical facts; if one fires on a correctly
    constructed group it indicates an implementation bug, so callers
    (notably the census runner) surface it as data rather than crashing.
    """


class CatalogError(ValueError):
    """Catalog text is malformed or fails its validation rules."""
