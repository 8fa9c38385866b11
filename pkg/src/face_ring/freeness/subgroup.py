"""Coordinate subgroups of T^m and (Z/2)^m given by generator matrices."""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterator, List, Sequence

from ..error_handling.errors import InputError
from ..linalg.matrix import ExactMatrix, FieldTag
from ..linalg.rank import rank
from ..linalg.snf import smith_normal_form


logger = logging.getLogger(__name__)


class SubgroupKind(str, Enum):
    REAL = "real"
    TORUS = "torus"

    @classmethod
    def parse(cls, text) -> "SubgroupKind":
        if isinstance(text, SubgroupKind):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError as e:
            raise InputError(f"unknown subgroup kind {text!r} (real or torus)", position="kind") from e


@dataclass(frozen=True)
class SubgroupSpec:
    """
    A rank-r subgroup H spanned by the rows of an r x m generator matrix.

    Real subgroups live in (Z/2)^m and have 0/1 entries; torus subgroups are
    images of integer matrices in T^m.

    Raises:
        InputError: If the rows are not independent, or entries do not fit the kind
    """

    kind: SubgroupKind
    generators: ExactMatrix
    r: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SubgroupKind.parse(self.kind))
        if self.generators.rows != self.r:
            raise InputError(f"{self.generators.rows} generator rows for claimed rank {self.r}")
        if not self.generators.is_integral():
            raise InputError("generator entries must be integers", position="generators")
        if self.kind is SubgroupKind.REAL:
            for i, row in enumerate(self.generators.to_lists()):
                for j, value in enumerate(row):
                    if value not in (0, 1):
                        raise InputError(
                            f"real generators take values 0/1, got {value}", position=f"generators[{i}][{j}]"
                        )
            actual = rank(self.generators, FieldTag.GF2)
        else:
            actual = sum(1 for d in smith_normal_form(self.generators) if d)
        if actual != self.r:
            raise InputError(f"generators have rank {actual}, expected {self.r}", position="generators")

    @classmethod
    def from_rows(cls, kind, rows: Sequence[Sequence[int]], m: int) -> "SubgroupSpec":
        matrix = ExactMatrix.from_rows(rows, cols=m)
        return cls(SubgroupKind.parse(kind), matrix, matrix.rows)

    @classmethod
    def diagonal(cls, kind, m: int) -> "SubgroupSpec":
        """The rank-one subgroup generated by (1, ..., 1)."""
        return cls.from_rows(kind, [[1] * m], m)

    @classmethod
    def full_real(cls, m: int) -> "SubgroupSpec":
        return cls.from_rows(SubgroupKind.REAL, [[int(i == j) for j in range(m)] for i in range(m)], m)

    @property
    def m(self) -> int:
        return self.generators.cols

    def rows(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self.generators.to_lists()]

    def elements(self) -> Iterator[int]:
        """Nonzero elements of a real subgroup as bit masks (bit p = coordinate p + 1)."""
        if self.kind is not SubgroupKind.REAL:
            raise InputError("only real subgroups have a finite element list")
        words = [sum(1 << j for j, x in enumerate(row) if x) for row in self.rows()]
        for choice in range(1, 1 << self.r):
            h = 0
            for i, word in enumerate(words):
                if choice >> i & 1:
                    h ^= word
            yield h

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "r": self.r, "generators": self.rows()}


def echelon_subgroups(r: int, m: int) -> Iterator[SubgroupSpec]:
    """
    Every rank-r subgroup of (Z/2)^m exactly once, as its reduced row-echelon matrix.

    Pivot columns are chosen first; entries right of a pivot outside the
    pivot columns range over 0/1.
    """
    if r < 0 or r > m:
        raise InputError(f"rank {r} is impossible in (Z/2)^{m}")
    for pivots in itertools.combinations(range(m), r):
        pivot_set = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, m) if j not in pivot_set]
        for bits in itertools.product((0, 1), repeat=len(free)):
            rows = [[0] * m for _ in range(r)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), bit in zip(free, bits):
                rows[i][j] = bit
            yield SubgroupSpec(SubgroupKind.REAL, ExactMatrix.from_rows(rows, cols=m), r)
