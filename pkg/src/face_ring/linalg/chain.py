"""Finite chain and cochain complexes of vector spaces and their homology."""

import logging
from dataclasses import dataclass
from typing import List, Literal, Tuple

from ..error_handling.errors import InputError, MalformedComplexError
from .matrix import ExactMatrix, FieldTag
from .rank import rank


logger = logging.getLogger(__name__)

Direction = Literal["chain", "cochain"]


@dataclass(frozen=True)
class ChainComplexData:
    """
    A bounded complex ``C_0, ..., C_n`` with differentials between neighbours.

    Position k carries degree ``start_degree + k``. For ``chain`` direction
    ``diffs[k]`` maps position k+1 to position k (shape ``dims[k] x dims[k+1]``);
    for ``cochain`` it maps position k to k+1 (shape ``dims[k+1] x dims[k]``).
    Construction checks shapes and that consecutive differentials compose to zero.
    """

    field: FieldTag
    diffs: Tuple[ExactMatrix, ...]
    dims: Tuple[int, ...]
    direction: Direction = "chain"
    start_degree: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "field", FieldTag.parse(self.field))
        object.__setattr__(self, "diffs", tuple(self.diffs))
        object.__setattr__(self, "dims", tuple(self.dims))
        if self.direction not in ("chain", "cochain"):
            raise InputError(f"unknown direction {self.direction!r}")
        if len(self.diffs) != max(len(self.dims) - 1, 0):
            raise InputError(f"{len(self.dims)} groups need {len(self.dims) - 1} differentials")
        for k, d in enumerate(self.diffs):
            lower, upper = self.dims[k], self.dims[k + 1]
            expected = (lower, upper) if self.direction == "chain" else (upper, lower)
            if d.shape != expected:
                raise InputError(f"differential {k} has shape {d.shape}, expected {expected}")
        modulus = 2 if self.field is FieldTag.GF2 else 0
        for k in range(len(self.diffs) - 1):
            if self.direction == "chain":
                composite = self.diffs[k].compose(self.diffs[k + 1])
            else:
                composite = self.diffs[k + 1].compose(self.diffs[k])
            if not composite.is_zero(modulus):
                raise MalformedComplexError(
                    f"d∘d ≠ 0 between degrees {self.start_degree + k} and {self.start_degree + k + 2}"
                )

    @property
    def degrees(self) -> List[int]:
        return [self.start_degree + k for k in range(len(self.dims))]

    def euler_characteristic(self) -> int:
        return sum(-dim if deg % 2 else dim for deg, dim in zip(self.degrees, self.dims))


def homology_dims(C: ChainComplexData) -> List[int]:
    """
    Dimension of (co)homology at every position.

    ``dim H_k = dims[k] - rank(map leaving k) - rank(map entering k)``; both
    directions give the same formula once maps are listed between neighbours.
    Missing end differentials count as rank 0.
    """
    ranks = [rank(d, C.field) for d in C.diffs]
    out = []
    for k, dim in enumerate(C.dims):
        before = ranks[k - 1] if k >= 1 else 0
        after = ranks[k] if k < len(ranks) else 0
        out.append(dim - before - after)
    logger.debug(f"homology over {C.field.value}: dims={list(C.dims)} ranks={ranks} -> {out}")
    return out
