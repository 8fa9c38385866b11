"""Exact rank over GF(2) and over the rationals."""

import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List

from ..error_handling.errors import InputError
from .matrix import ExactMatrix, FieldTag


logger = logging.getLogger(__name__)


def pack_rows_gf2(M: ExactMatrix) -> List[int]:
    """
    Reduce each row mod 2 and pack it into an int bitset (bit j = column j).

    Raises:
        InputError: If an entry is a non-integral fraction
    """
    packed = []
    for i, row in enumerate(M.sparse_rows()):
        word = 0
        for j, value in row.items():
            if isinstance(value, Fraction):
                raise InputError(f"non-integral entry {value} has no GF(2) image", position=f"row {i}")
            if value & 1:
                word |= 1 << j
        packed.append(word)
    return packed


def rank_gf2_packed(rows: Iterable[int]) -> int:
    """
    Rank of packed GF(2) rows.

    Each incoming row is XOR-reduced against a basis keyed by leading bit;
    whole machine words are processed per XOR.
    """
    basis: Dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            pivot = basis.get(lead)
            if pivot is None:
                basis[lead] = row
                break
            row ^= pivot
    return len(basis)


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    """Divide out the content and make the leading entry positive."""
    if not row:
        return row
    content = 0
    for value in row.values():
        content = gcd(content, value)
    if row[min(row)] < 0:
        content = -content
    if content == 1:
        return row
    return {col: value // content for col, value in row.items()}


def _integral_rows(M: ExactMatrix) -> List[Dict[int, int]]:
    rows = []
    for row in M.sparse_rows():
        scale = 1
        for value in row.values():
            if isinstance(value, Fraction):
                scale = lcm(scale, value.denominator)
        rows.append({col: int(value * scale) for col, value in row.items()})
    return rows


def rank_rational(M: ExactMatrix) -> int:
    """
    Rank over Q by fraction-free elimination on sparse integer rows.

    Rows are scaled to integers, then each row is reduced against the
    current pivots with ``r <- p[c] * r - r[c] * p`` and made primitive, so
    every intermediate value is an exact integer of controlled size.
    """
    basis: Dict[int, Dict[int, int]] = {}
    for row in _integral_rows(M):
        row = _primitive(row)
        while row:
            col = min(row)
            pivot = basis.get(col)
            if pivot is None:
                basis[col] = row
                break
            a, b = pivot[col], row[col]
            merged: Dict[int, int] = {}
            for key in row.keys() | pivot.keys():
                value = a * row.get(key, 0) - b * pivot.get(key, 0)
                if value:
                    merged[key] = value
            row = _primitive(merged)
    return len(basis)


def rank(M: ExactMatrix, field: FieldTag) -> int:
    """
    Rank of an exact matrix over the given field.

    Args:
        M: Matrix with integer or fraction entries
        field: GF2 reduces entries mod 2; Rational keeps them exact

    Returns:
        The rank, 0 for empty matrices
    """
    field = FieldTag.parse(field)
    if M.rows == 0 or M.cols == 0:
        return 0
    if field is FieldTag.GF2:
        result = rank_gf2_packed(pack_rows_gf2(M))
    else:
        result = rank_rational(M)
    logger.debug(f"rank {M.rows}x{M.cols} over {field.value} = {result}")
    return result
