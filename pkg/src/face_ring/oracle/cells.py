"""Literal product-cell models of (D^2, S^1) and (D^1, S^0) moment-angle complexes."""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from ..error_handling.errors import InputError, SizeError
from ..linalg.chain import ChainComplexData, homology_dims
from ..linalg.matrix import ExactMatrix, FieldTag
from ..macx.poincare import PoincarePolynomial
from ..simplicial.complex import SimplicialComplex


logger = logging.getLogger(__name__)

MAX_ORACLE_GROUND_SET = 7


@dataclass(frozen=True)
class FactorCells:
    """
    Minimal CW structure of one factor X with subcomplex W.

    Attributes:
        names: Cell names, in enumeration order
        dims: Dimension of each cell
        boundary: ``boundary[c]`` lists ``(face, coefficient)``
        top: Index of the single cell of X not in W
    """

    names: Tuple[str, ...]
    dims: Tuple[int, ...]
    boundary: Tuple[Tuple[Tuple[int, int], ...], ...]
    top: int


class CellModel(str, Enum):
    """Pair (X, W) used in every coordinate."""

    DISK2 = "disk2"
    INTERVAL = "interval"

    @classmethod
    def parse(cls, text) -> "CellModel":
        if isinstance(text, CellModel):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError as e:
            raise InputError(f"unknown cell model {text!r} (disk2 or interval)") from e

    @property
    def factor(self) -> FactorCells:
        return _FACTORS[self]


_FACTORS: Dict[CellModel, FactorCells] = {
    # e0 and e1 form the circle; e2 is glued along e1 with degree one.
    CellModel.DISK2: FactorCells(
        names=("e0", "e1", "e2"),
        dims=(0, 1, 2),
        boundary=((), (), ((1, 1),)),
        top=2,
    ),
    # e1 runs from p- to p+.
    CellModel.INTERVAL: FactorCells(
        names=("p-", "p+", "e1"),
        dims=(0, 0, 1),
        boundary=((), (), ((1, 1), (0, -1))),
        top=2,
    ),
}


def _top_set(cell: Tuple[int, ...], top: int) -> int:
    mask = 0
    for p, c in enumerate(cell):
        if c == top:
            mask |= 1 << p
    return mask


def product_cells(K: SimplicialComplex, model: CellModel) -> List[Tuple[int, ...]]:
    """Product cells whose top set is a face of K, in lexicographic order."""
    factor = CellModel.parse(model).factor
    choices = range(len(factor.names))
    return [cell for cell in itertools.product(choices, repeat=K.m) if _top_set(cell, factor.top) in K.faces]


def _check_size(K: SimplicialComplex) -> None:
    if K.m > MAX_ORACLE_GROUND_SET:
        raise SizeError(f"cell models are limited to m <= {MAX_ORACLE_GROUND_SET}, got m={K.m}")


def build_complex(K: SimplicialComplex, model: CellModel, field: FieldTag) -> ChainComplexData:
    """
    Cellular chain complex of the union over faces sigma of B_sigma(X, W).

    The boundary of a product cell follows the Leibniz rule: the i-th term
    carries the sign (-1)^(dim c_1 + ... + dim c_(i-1)). Over GF(2) the
    coefficients are reduced mod 2.

    Raises:
        SizeError: If m > 7
        MalformedComplexError: If the differentials do not square to zero
    """
    _check_size(K)
    model = CellModel.parse(model)
    field = FieldTag.parse(field)
    factor = model.factor

    cells = product_cells(K, model)
    by_degree: Dict[int, Dict[Tuple[int, ...], int]] = {}
    for cell in cells:
        degree = sum(factor.dims[c] for c in cell)
        group = by_degree.setdefault(degree, {})
        group[cell] = len(group)
    top_degree = max(by_degree)
    dims = [len(by_degree.get(n, {})) for n in range(top_degree + 1)]

    diffs = []
    for n in range(1, top_degree + 1):
        lower = by_degree.get(n - 1, {})
        triplets = []
        for cell, col in by_degree.get(n, {}).items():
            sign_exponent = 0
            for p, c in enumerate(cell):
                for face, coefficient in factor.boundary[c]:
                    value = -coefficient if sign_exponent % 2 else coefficient
                    if field is FieldTag.GF2:
                        value %= 2
                    if value:
                        target = cell[:p] + (face,) + cell[p + 1:]
                        triplets.append((lower[target], col, value))
                sign_exponent += factor.dims[c]
        diffs.append(ExactMatrix.from_triplets(dims[n - 1], dims[n], triplets))

    C = ChainComplexData(field, diffs, dims, direction="chain", start_degree=0)
    logger.debug(f"{model.value} cell complex of {K} over {field.value}: {len(cells)} cells, dims={dims}")
    return C


def oracle_poincare(K: SimplicialComplex, model: CellModel, field: FieldTag) -> PoincarePolynomial:
    """Graded dimensions of the built cell complex (homology and cohomology agree over a field)."""
    C = build_complex(K, model, field)
    P = PoincarePolynomial.from_dims(homology_dims(C))
    if P.euler_characteristic() != C.euler_characteristic():
        raise AssertionError(
            f"Euler characteristic {C.euler_characteristic()} of the cells differs from {P.euler_characteristic()}"
        )
    return P
