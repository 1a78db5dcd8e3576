"""Exact element-order statistics and supersolvability checks for small permutation groups."""

from .errors import CapExceeded, CatalogError, CriterionViolation
from .perm import (
    DEFAULT_ELEMENT_CAP,
    DEFAULT_ISO_CAP,
    DEFAULT_LATTICE_CAP,
    PermGroup,
    Permutation,
    Subgroup,
    direct_product,
    is_isomorphic,
)

__all__ = [
    "CapExceeded",
    "CatalogError",
    "CriterionViolation",
    "DEFAULT_ELEMENT_CAP",
    "DEFAULT_ISO_CAP",
    "DEFAULT_LATTICE_CAP",
    "PermGroup",
    "Permutation",
    "Subgroup",
    "direct_product",
    "is_isomorphic",
    "avg_order",
    "order_spectrum",
    "psi",
]

__version__ = "0.1.0"

from .stats import avg_order, order_spectrum, psi  # noqa: E402  (depends on perm)
