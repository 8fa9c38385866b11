"""Exact linear algebra - GF(2) and rational rank, Smith normal form, homology."""

from .matrix import ExactMatrix, FieldTag
from .rank import rank
from .snf import smith_normal_form
from .chain import ChainComplexData, homology_dims

__all__ = [
    "ExactMatrix",
    "FieldTag",
    "rank",
    "smith_normal_form",
    "ChainComplexData",
    "homology_dims",
]
