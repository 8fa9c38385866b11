"""Bigraded Betti numbers of Stanley-Reisner rings via the Hochster formula."""

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Mapping, Optional, Tuple

import numpy as np

from ..linalg.matrix import FieldTag
from ..powerset.subset import canonical_order, popcount
from ..simplicial.complex import SimplicialComplex
from .cohomology import betti_column


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    """
    Nonzero beta_{i,a} of the face ring of a complex, keyed by ``(i, mask)``.

    Absent keys are zero; only square-free degrees a exist by construction.

    Attributes:
        m: Ground-set size
        field: Coefficient field
        entries: ``{(i, mask): beta}`` with beta > 0
        labels: Vertex names used when reporting subsets
    """

    m: int
    field: FieldTag
    entries: Mapping[Tuple[int, int], int]
    labels: Tuple[int, ...] = dataclass_field(default=())

    def __post_init__(self) -> None:
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.m + 1)))

    def beta(self, i: int, mask: int) -> int:
        return self.entries.get((i, mask), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def subset_sum(self, mask: int) -> int:
        """Sum over i of beta_{i,a}."""
        return sum(b for (i, a), b in self.entries.items() if a == mask)

    def parity_table(self) -> np.ndarray:
        """Entry a is the sum over i of beta_{i,a}, mod 2."""
        parity = np.zeros(1 << self.m, dtype=np.uint8)
        for (_, mask), beta in self.entries.items():
            parity[mask] ^= beta & 1
        return parity

    def betti_numbers(self) -> List[int]:
        """beta_i = total rank of the i-th free module in the minimal resolution."""
        if not self.entries:
            return []
        out = [0] * (max(i for i, _ in self.entries) + 1)
        for (i, _), beta in self.entries.items():
            out[i] += beta
        return out

    def projective_dimension(self) -> int:
        """Length of the minimal free resolution."""
        return max((i for i, _ in self.entries), default=0)

    def graded(self) -> Dict[Tuple[int, int], int]:
        """Coarse table ``{(i, |a|): sum of beta_{i,a}}``."""
        out: Dict[Tuple[int, int], int] = {}
        for (i, mask), beta in self.entries.items():
            key = (i, popcount(mask))
            out[key] = out.get(key, 0) + beta
        return out

    def format_graded(self) -> str:
        """
        Macaulay2-style layout: column i, row j - i, dots for zeros.
        """
        coarse = self.graded()
        if not coarse:
            return ""
        width = self.projective_dimension() + 1
        height = max(j - i for i, j in coarse) + 1
        totals = self.betti_numbers()
        cells = [[str(coarse.get((i, r + i), ".")) for i in range(width)] for r in range(height)]
        pad = max(len(s) for row in cells + [[str(t) for t in totals]] for s in row)
        lines = ["       " + " ".join(f"{i:>{pad}}" for i in range(width))]
        lines.append("total: " + " ".join(f"{t:>{pad}}" for t in totals))
        for r, row in enumerate(cells):
            lines.append(f"{r:>5}: " + " ".join(f"{s:>{pad}}" for s in row))
        return "\n".join(lines)

    def subset_labels(self, mask: int) -> List[int]:
        return [self.labels[p] for p in range(self.m) if mask >> p & 1]

    def rows(self) -> List[Dict[str, Any]]:
        ordered = sorted(self.entries.items(), key=lambda kv: (kv[0][0], popcount(kv[0][1]), kv[0][1]))
        return [{"i": i, "a": self.subset_labels(mask), "beta": beta} for (i, mask), beta in ordered]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "field": self.field.value,
            "entries": self.rows(),
            "betti_numbers": self.betti_numbers(),
            "total": self.total(),
        }


def betti_table(K: SimplicialComplex, field: FieldTag, pool: Optional[Any] = None) -> BettiTable:
    """
    All beta_{i,a} = dim H~^{|a|-i-1}(K|_a) for a ⊆ [m], 0 <= i <= |a|.

    Args:
        K: Simplicial complex
        field: Coefficient field
        pool: Optional ProcessPool; the 2^m restrictions are independent jobs

    Returns:
        BettiTable assembled in canonical subset order
    """
    field = FieldTag.parse(field)
    jobs = [(K, mask, field) for mask in canonical_order(range(1 << K.m))]
    if pool is not None:
        columns = pool.map(betti_column, jobs, task_name=f"betti m={K.m}")
    else:
        columns = [betti_column(job) for job in jobs]

    entries: Dict[Tuple[int, int], int] = {}
    for mask, column in columns:
        for i, beta in column:
            entries[(i, mask)] = beta
    table = BettiTable(K.m, field, entries, labels=K.labels)
    logger.info(f"Betti table of {K} over {field.value}: total={table.total()}")
    return table


def total_betti_sum(T: BettiTable) -> int:
    """Sum of all beta_{i,a}, i.e. the total dimension of Tor."""
    return T.total()
