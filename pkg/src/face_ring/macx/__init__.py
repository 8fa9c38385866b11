"""Moment-angle module - Poincaré polynomials from bigraded Betti numbers."""

from .poincare import (
    DegreeVector,
    PoincarePolynomial,
    degree_bound_holds,
    poincare_generalized,
    poincare_rzk,
    poincare_zk,
    total_dim,
)

__all__ = [
    "DegreeVector",
    "PoincarePolynomial",
    "degree_bound_holds",
    "poincare_generalized",
    "poincare_rzk",
    "poincare_zk",
    "total_dim",
]
