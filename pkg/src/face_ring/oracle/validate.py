"""Agreement between Hochster-derived and cellular Poincaré polynomials."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

from ..hochster.betti import BettiTable, betti_table
from ..linalg.matrix import FieldTag
from ..macx.poincare import PoincarePolynomial, poincare_rzk, poincare_zk
from ..simplicial.complex import SimplicialComplex
from .cells import CellModel, oracle_poincare


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelComparison:
    model: CellModel
    field: FieldTag
    oracle: PoincarePolynomial
    hochster: PoincarePolynomial

    @property
    def match(self) -> bool:
        return self.oracle == self.hochster

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model.value,
            "field": self.field.value,
            "oracle": self.oracle.to_dict(),
            "hochster": self.hochster.to_dict(),
            "match": self.match,
        }


@dataclass(frozen=True)
class CrossValidationReport:
    """
    Both cell models compared degree by degree against the Betti-table route.

    ``totals_agree`` records that the complex and real versions have the same
    total dimension.
    """

    comparisons: Tuple[ModelComparison, ...]

    @property
    def totals_agree(self) -> bool:
        return len({c.hochster.total_dim() for c in self.comparisons}) <= 1

    @property
    def holds(self) -> bool:
        return all(c.match for c in self.comparisons) and self.totals_agree

    def comparison(self, model: CellModel) -> ModelComparison:
        model = CellModel.parse(model)
        return next(c for c in self.comparisons if c.model is model)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "comparisons": [c.to_dict() for c in self.comparisons],
            "totals_agree": self.totals_agree,
            "holds": self.holds,
        }


def cross_validate(
    K: SimplicialComplex, field: FieldTag, table: Optional[BettiTable] = None
) -> CrossValidationReport:
    """
    Compare oracle_poincare with poincare_zk (disk2) and poincare_rzk (interval).

    Mismatches are reported, not raised.

    Raises:
        SizeError: If m > 7
    """
    field = FieldTag.parse(field)
    if table is None:
        table = betti_table(K, field)
    expected = {
        CellModel.DISK2: poincare_zk(K, field, table=table),
        CellModel.INTERVAL: poincare_rzk(K, field, table=table),
    }
    comparisons = tuple(
        ModelComparison(model, field, oracle_poincare(K, model, field), hochster)
        for model, hochster in expected.items()
    )
    report = CrossValidationReport(comparisons)
    for c in comparisons:
        if not c.match:
            logger.error(
                f"Oracle mismatch for {K} ({c.model.value}, {field.value}): cells {c.oracle}, Betti table {c.hochster}"
            )
    return report
