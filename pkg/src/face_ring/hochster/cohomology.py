"""Reduced simplicial cohomology from the coaugmented cochain complex."""

import logging
from functools import lru_cache
from typing import List, Tuple

from ..linalg.chain import ChainComplexData, homology_dims
from ..linalg.matrix import ExactMatrix, FieldTag
from ..powerset.subset import mask_elements, popcount
from ..simplicial.complex import SimplicialComplex


logger = logging.getLogger(__name__)


def coaugmented_cochain_complex(K: SimplicialComplex, field: FieldTag) -> ChainComplexData:
    """
    Cochain complex of K with the empty face spanning degree -1.

    Faces of each size are indexed in canonical order; the coboundary sends
    sigma* to the sum over tau = sigma + {v} of (-1)^(position of v in tau) tau*.
    """
    grouped = K.faces_by_size()
    sizes = range(0, K.dim + 2)
    index = {size: {face: n for n, face in enumerate(grouped.get(size, []))} for size in sizes}
    diffs = []
    for size in sizes[:-1]:
        lower, upper = index[size], index[size + 1]
        triplets = []
        for tau, row in upper.items():
            for position, element in enumerate(mask_elements(tau)):
                sigma = tau & ~(1 << (element - 1))
                triplets.append((row, lower[sigma], -1 if position % 2 else 1))
        diffs.append(ExactMatrix.from_triplets(len(upper), len(lower), triplets))
    dims = [len(index[size]) for size in sizes]
    return ChainComplexData(field, diffs, dims, direction="cochain", start_degree=-1)


@lru_cache(maxsize=8192)
def _reduced_cohomology(K: SimplicialComplex, field: FieldTag) -> Tuple[int, ...]:
    if K.maximal_faces != (0,) and K.cone_points():
        # Cones are acyclic.
        return (0,) * (K.dim + 2)
    return tuple(homology_dims(coaugmented_cochain_complex(K, field)))


def reduced_cohomology_dims(K: SimplicialComplex, field: FieldTag) -> List[int]:
    """
    Dimensions of reduced cohomology in degrees -1, 0, ..., dim K.

    Example:
        >>> reduced_cohomology_dims(point_complex(2), FieldTag.GF2)
        [1]
    """
    return list(_reduced_cohomology(K, FieldTag.parse(field)))


def restricted_cohomology(K: SimplicialComplex, mask: int, field: FieldTag) -> List[int]:
    """Reduced cohomology of K|_a for the subset with the given mask."""
    dims = reduced_cohomology_dims(K.restriction(mask), field)
    logger.debug(f"H~(K|{K.to_labels(mask)}) over {FieldTag.parse(field).value}: {dims}")
    return dims


def betti_column(args: Tuple[SimplicialComplex, int, FieldTag]) -> Tuple[int, List[Tuple[int, int]]]:
    """
    Betti numbers beta_{i,a} for one subset a, as ``(mask, [(i, beta), ...])``.

    Module-level so worker processes can import it.
    """
    K, mask, field = args
    size = popcount(mask)
    column = []
    for position, dim in enumerate(restricted_cohomology(K, mask, field)):
        # position p is degree p - 1, i.e. homological index |a| - p
        if dim:
            column.append((size - position, dim))
    return mask, column
