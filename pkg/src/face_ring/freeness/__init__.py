"""Freeness module - Free coordinate subgroup actions and the 2^r lower bound."""

from .subgroup import SubgroupKind, SubgroupSpec, echelon_subgroups
from .criteria import (
    MAX_SEARCH_GROUND_SET,
    is_free,
    is_free_all_faces,
    max_free_rank_real,
    orbit_free_on_cells,
    rank_bound,
)
from .halperin_carlsson import HalperinCarlssonReport, hc_verify

__all__ = [
    "SubgroupKind",
    "SubgroupSpec",
    "echelon_subgroups",
    "MAX_SEARCH_GROUND_SET",
    "is_free",
    "is_free_all_faces",
    "max_free_rank_real",
    "orbit_free_on_cells",
    "rank_bound",
    "HalperinCarlssonReport",
    "hc_verify",
]
