"""Hochster module - Reduced cohomology, Betti tables, parity and support checks."""

from .cohomology import coaugmented_cochain_complex, reduced_cohomology_dims
from .betti import BettiTable, betti_table, total_betti_sum
from .verify import ParityReport, SupportBoundReport, check_parity_identity, check_support_bound

__all__ = [
    "coaugmented_cochain_complex",
    "reduced_cohomology_dims",
    "BettiTable",
    "betti_table",
    "total_betti_sum",
    "ParityReport",
    "SupportBoundReport",
    "check_parity_identity",
    "check_support_bound",
]
