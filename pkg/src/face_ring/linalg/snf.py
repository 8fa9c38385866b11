"""Smith normal form of integer matrices (invariant factors only)."""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from ..error_handling.errors import InputError
from .matrix import ExactMatrix


logger = logging.getLogger(__name__)


def _smallest_entry(A: List[List[int]], t: int) -> Optional[Tuple[int, int]]:
    """Position of a nonzero entry of least absolute value in A[t:, t:]; ties keep (t, t)."""
    best = None
    best_abs = 0
    for i in range(t, len(A)):
        row = A[i]
        for j in range(t, len(row)):
            value = row[j]
            if value and (best is None or abs(value) < best_abs):
                best, best_abs = (i, j), abs(value)
    return best


def smith_normal_form(M: ExactMatrix) -> List[int]:
    """
    Invariant factors d_1 | d_2 | ... of an integer matrix.

    Artin's elimination: move the smallest nonzero entry to the pivot, clear
    its row and column by division with remainder (restarting whenever a
    smaller remainder appears), then force divisibility of the remaining
    block by folding an offending row into the pivot row.

    Raises:
        InputError: If an entry is not an integer
    """
    A: List[List[int]] = []
    for i, row in enumerate(M.to_lists()):
        if any(isinstance(value, Fraction) for value in row):
            raise InputError("Smith normal form needs integer entries", position=f"row {i}")
        A.append([int(value) for value in row])
    rows, cols = M.rows, M.cols
    factors: List[int] = []
    t = 0

    while t < min(rows, cols):
        position = _smallest_entry(A, t)
        if position is None:
            break
        i, j = position
        A[t], A[i] = A[i], A[t]
        if j != t:
            for row in A:
                row[t], row[j] = row[j], row[t]
        pivot = A[t][t]

        dirty = False
        for r in range(t + 1, rows):
            q = A[r][t] // pivot
            if q:
                A[r] = [x - q * y for x, y in zip(A[r], A[t])]
            if A[r][t]:
                dirty = True
        for c in range(t + 1, cols):
            q = A[t][c] // pivot
            if q:
                for row in A:
                    row[c] -= q * row[t]
            if A[t][c]:
                dirty = True
        if dirty:
            continue

        offending = next(
            (r for r in range(t + 1, rows) if any(A[r][c] % pivot for c in range(t + 1, cols))),
            None,
        )
        if offending is not None:
            A[t] = [x + y for x, y in zip(A[t], A[offending])]
            continue

        factors.append(abs(pivot))
        t += 1

    logger.debug(f"Smith normal form of {rows}x{cols} matrix: {factors}")
    return factors
