"""Power-set algebra - Subsets, Z/2Z-valued functions, Möbius transform."""

from .subset import MAX_GROUND_SET, Subset, check_ground_set, popcount
from .functions import (
    BasisKind,
    SubsetFn,
    as_polynomial,
    coordinate,
    delta,
    find_niceness_violation,
    is_nice,
    make_basis,
    mobius,
    mobius_naive,
    mu,
    mu_expansion,
    one,
    require_nice,
    support,
)

__all__ = [
    "MAX_GROUND_SET",
    "Subset",
    "check_ground_set",
    "popcount",
    "BasisKind",
    "SubsetFn",
    "as_polynomial",
    "coordinate",
    "delta",
    "find_niceness_violation",
    "is_nice",
    "make_basis",
    "mobius",
    "mobius_naive",
    "mu",
    "mu_expansion",
    "one",
    "require_nice",
    "support",
]
