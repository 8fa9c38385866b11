"""Freeness of coordinate subgroup actions on moment-angle complexes."""

import logging
from typing import Any, List, Optional, Tuple

from ..error_handling.errors import InputError, SizeError
from ..linalg.matrix import FieldTag
from ..linalg.rank import rank
from ..linalg.snf import smith_normal_form
from ..oracle.cells import CellModel, product_cells
from ..simplicial.complex import SimplicialComplex
from .subgroup import SubgroupKind, SubgroupSpec, echelon_subgroups


logger = logging.getLogger(__name__)

MAX_SEARCH_GROUND_SET = 6


def _check_dimensions(H: SubgroupSpec, K: SimplicialComplex) -> None:
    if H.m != K.m:
        raise InputError(f"subgroup acts on {H.m} coordinates, complex has m={K.m}")


def _injective_off_face(H: SubgroupSpec, face: int) -> bool:
    columns = [p for p in range(H.m) if not face >> p & 1]
    block = H.generators.select_columns(columns)
    if H.kind is SubgroupKind.REAL:
        return rank(block, FieldTag.GF2) == H.r
    factors = smith_normal_form(block)
    return len(factors) == H.r and all(d == 1 for d in factors)


def is_free(H: SubgroupSpec, K: SimplicialComplex) -> bool:
    """
    H acts freely iff its projection away from every maximal face is injective.

    For a real subgroup this is GF(2) rank r of the columns outside the face;
    for a torus the column block must be a split injection of lattices, i.e.
    r invariant factors all equal to 1.

    Raises:
        InputError: If H and K live on different ground sets
    """
    _check_dimensions(H, K)
    for face in K.maximal_faces:
        if not _injective_off_face(H, face):
            logger.debug(f"{H.kind.value} subgroup {H.rows()} has isotropy over face {K.to_labels(face)}")
            return False
    return True


def is_free_all_faces(H: SubgroupSpec, K: SimplicialComplex) -> bool:
    """Same criterion checked on every face instead of the maximal ones."""
    _check_dimensions(H, K)
    return all(_injective_off_face(H, face) for face in K.faces)


def orbit_free_on_cells(H: SubgroupSpec, K: SimplicialComplex) -> bool:
    """
    Literal fixed-point check on the interval cell model of a real subgroup.

    Each cell is represented by its barycenter: coordinate -1 on p-, +1 on p+
    and 0 on e1. A nonzero h flips the signs of its coordinates; the action is
    free iff no nonzero h fixes a barycenter.
    """
    _check_dimensions(H, K)
    if H.kind is not SubgroupKind.REAL:
        raise InputError("the cell-level orbit check applies to real subgroups")
    coordinates = {0: -1, 1: 1, 2: 0}
    elements = list(H.elements())
    for cell in product_cells(K, CellModel.INTERVAL):
        point = [coordinates[c] for c in cell]
        for h in elements:
            moved = [-x if h >> p & 1 else x for p, x in enumerate(point)]
            if moved == point:
                return False
    return True


def rank_bound(K: SimplicialComplex) -> int:
    """Upper bound m - dim K - 1 on the rank of a freely acting subgroup."""
    return K.m - K.dim - 1


def _free_job(args: Tuple[SubgroupSpec, SimplicialComplex]) -> bool:
    H, K = args
    return is_free(H, K)


def max_free_rank_real(
    K: SimplicialComplex, pool: Optional[Any] = None
) -> Tuple[int, SubgroupSpec]:
    """
    Largest r such that some rank-r subgroup of (Z/2)^m acts freely, with a witness.

    Ranks are tried from m downwards over all echelon-form generator matrices.

    Raises:
        SizeError: If m > 6
    """
    if K.m > MAX_SEARCH_GROUND_SET:
        raise SizeError(f"subgroup search is limited to m <= {MAX_SEARCH_GROUND_SET}, got m={K.m}")
    for r in range(K.m, -1, -1):
        candidates: List[SubgroupSpec] = list(echelon_subgroups(r, K.m))
        jobs = [(H, K) for H in candidates]
        if pool is not None:
            verdicts = pool.map(_free_job, jobs, task_name=f"free rank {r}")
        else:
            verdicts = [_free_job(job) for job in jobs]
        for H, free in zip(candidates, verdicts):
            if free:
                logger.debug(f"{K}: free real rank {r} witnessed by {H.rows()}")
                return r, H
    raise AssertionError("the trivial subgroup always acts freely")
