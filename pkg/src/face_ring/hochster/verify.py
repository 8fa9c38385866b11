"""Checks relating the Möbius transform of a complex to its Betti numbers."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from ..linalg.matrix import FieldTag
from ..powerset.functions import mobius
from ..powerset.subset import Subset, canonical_order
from ..simplicial.complex import SimplicialComplex, indicator
from .betti import BettiTable, betti_table


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParityReport:
    """
    Outcome of comparing M(f)(a) with the parity of sum_i beta_{i,a}.

    Attributes:
        holds: No subset violates the identity
        witness: First violating subset in canonical order
        field: Field the Betti numbers were computed over
        covers_ground_set: Whether every element of [m] is a vertex (the
            identity is stated under this hypothesis; it is evaluated anyway)
    """

    holds: bool
    witness: Optional[Subset]
    field: FieldTag
    covers_ground_set: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "witness": list(self.witness.elements) if self.witness else None,
            "field": self.field.value,
            "covers_ground_set": self.covers_ground_set,
        }


@dataclass(frozen=True)
class SupportBoundReport:
    """|supp(M(f))| against the total Betti number."""

    lhs: int
    rhs: int
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"mobius_support_size": self.lhs, "total_betti": self.rhs, "holds": self.holds}


def check_parity_identity(
    K: SimplicialComplex, field: FieldTag, table: Optional[BettiTable] = None
) -> ParityReport:
    """
    Check M(f)(a) ≡ sum_i beta_{i,a} (mod 2) for every a, with f = indicator(K).
    """
    field = FieldTag.parse(field)
    if table is None:
        table = betti_table(K, field)
    if K.has_ghost_vertices():
        logger.warning(f"{K} has ghost vertices {K.ghost_vertices()}; evaluating the identity anyway")
    transform = mobius(indicator(K)).values
    mismatches = np.flatnonzero(transform != table.parity_table())
    witness = None
    if len(mismatches):
        witness = Subset(canonical_order(int(x) for x in mismatches)[0], K.m)
        logger.error(f"Parity identity fails for {K} over {field.value} at {witness}")
    return ParityReport(
        holds=witness is None,
        witness=witness,
        field=field,
        covers_ground_set=not K.has_ghost_vertices(),
    )


def check_support_bound(
    K: SimplicialComplex, field: FieldTag, table: Optional[BettiTable] = None
) -> SupportBoundReport:
    """Evaluate |supp(M(f))| <= sum of all beta_{i,a}."""
    if table is None:
        table = betti_table(K, field)
    lhs = mobius(indicator(K)).support_size()
    rhs = table.total()
    if lhs > rhs:
        logger.error(f"Support bound fails for {K}: {lhs} > {rhs}")
    return SupportBoundReport(lhs=lhs, rhs=rhs, holds=lhs <= rhs)
