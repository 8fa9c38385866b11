"""Total-dimension lower bound 2^r for free subgroup actions."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from ..hochster.betti import BettiTable, betti_table
from ..linalg.matrix import FieldTag
from ..macx.poincare import poincare_rzk, poincare_zk
from ..simplicial.complex import SimplicialComplex
from .criteria import is_free, rank_bound
from .subgroup import SubgroupKind, SubgroupSpec


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HalperinCarlssonReport:
    """
    Outcome of the free-action lower-bound check.

    Attributes:
        free: Whether H acts freely; the bounds are only checked when it does
        r: Rank of H
        rank_bound: m - dim K - 1
        total_dim_zk: Total cohomology dimension of the moment-angle complex
        total_dim_rzk: Same for the real moment-angle complex
        lower_bound: 2^r
    """

    free: bool
    r: int
    rank_bound: int
    total_dim_zk: int
    total_dim_rzk: int
    lower_bound: int
    kind: SubgroupKind

    @property
    def total_dim(self) -> int:
        return self.total_dim_zk if self.kind is SubgroupKind.TORUS else self.total_dim_rzk

    @property
    def bound_holds(self) -> Optional[bool]:
        return self.total_dim >= self.lower_bound if self.free else None

    @property
    def rank_bound_holds(self) -> Optional[bool]:
        return self.r <= self.rank_bound if self.free else None

    @property
    def totals_agree(self) -> bool:
        return self.total_dim_zk == self.total_dim_rzk

    @property
    def holds(self) -> bool:
        if not self.totals_agree:
            return False
        return not self.free or bool(self.bound_holds and self.rank_bound_holds)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "free": self.free,
            "r": self.r,
            "rank_bound": self.rank_bound,
            "total_dim_zk": self.total_dim_zk,
            "total_dim_rzk": self.total_dim_rzk,
            "lower_bound": self.lower_bound,
            "bound_holds": self.bound_holds,
            "rank_bound_holds": self.rank_bound_holds,
            "holds": self.holds,
        }


def hc_verify(
    K: SimplicialComplex, H: SubgroupSpec, field: FieldTag, table: Optional[BettiTable] = None
) -> HalperinCarlssonReport:
    """
    Check total_dim >= 2^r and r <= m - dim K - 1 for a free H.

    A subgroup that does not act freely is reported as such and the bounds
    are skipped.
    """
    field = FieldTag.parse(field)
    free = is_free(H, K)
    if table is None:
        table = betti_table(K, field)
    report = HalperinCarlssonReport(
        free=free,
        r=H.r,
        rank_bound=rank_bound(K),
        total_dim_zk=poincare_zk(K, field, table=table).total_dim(),
        total_dim_rzk=poincare_rzk(K, field, table=table).total_dim(),
        lower_bound=1 << H.r,
        kind=H.kind,
    )
    if not free:
        logger.info(f"{H.kind.value} subgroup {H.rows()} does not act freely on {K}; bound skipped")
    elif not report.holds:
        logger.error(f"Lower bound fails for {K}: {report.to_dict()}")
    return report
