"""Oracle module - Literal cell complexes checked against the Betti-table route."""

from .cells import MAX_ORACLE_GROUND_SET, CellModel, FactorCells, build_complex, oracle_poincare, product_cells
from .validate import CrossValidationReport, ModelComparison, cross_validate

__all__ = [
    "MAX_ORACLE_GROUND_SET",
    "CellModel",
    "FactorCells",
    "build_complex",
    "oracle_poincare",
    "product_cells",
    "CrossValidationReport",
    "ModelComparison",
    "cross_validate",
]
