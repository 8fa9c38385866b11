"""Exact matrices over the integers, the rationals and GF(2)."""

from enum import Enum
from fractions import Fraction
from numbers import Integral
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..error_handling.errors import InputError


Scalar = Union[int, Fraction]

# int64 products stay exact while |a| * |b| * inner < 2^62
_INT64_SAFE = 1 << 62


class FieldTag(str, Enum):
    """Coefficient field of a cohomology computation."""

    GF2 = "GF2"
    RATIONAL = "Rational"

    @classmethod
    def parse(cls, text: Union[str, "FieldTag"]) -> "FieldTag":
        if isinstance(text, FieldTag):
            return text
        key = str(text).strip().lower()
        if key in ("gf2", "gf(2)", "z2", "f2"):
            return cls.GF2
        if key in ("rational", "rationals", "q", "qq"):
            return cls.RATIONAL
        raise InputError(f"unknown field {text!r} (expected GF2 or Rational)")


def _exact(value: object) -> Scalar:
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Integral):
        return int(value)
    raise InputError(f"matrix entry {value!r} is not an exact scalar")


class ExactMatrix:
    """
    Immutable dense matrix of Python ints / Fractions.

    Entries live in a numpy object array so arithmetic never leaves exact
    arbitrary-precision scalars; floats are rejected at construction.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: np.ndarray) -> None:
        if entries.ndim != 2:
            raise InputError(f"matrix must be two-dimensional, got shape {entries.shape}")
        self._entries = entries
        self._entries.flags.writeable = False

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: Optional[int] = None) -> "ExactMatrix":
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        table = np.empty((len(rows), cols), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise InputError(f"row {i} has {len(row)} entries, expected {cols}", position=f"row {i}")
            for j, value in enumerate(row):
                table[i, j] = _exact(value)
        return cls(table)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        table = np.empty((rows, cols), dtype=object)
        table.fill(0)
        return cls(table)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        table = np.empty((n, n), dtype=object)
        table.fill(0)
        for i in range(n):
            table[i, i] = 1
        return cls(table)

    @classmethod
    def from_triplets(
        cls, rows: int, cols: int, triplets: Iterable[Tuple[int, int, object]]
    ) -> "ExactMatrix":
        """Build from (row, col, value) entries; repeated positions are summed."""
        table = np.empty((rows, cols), dtype=object)
        table.fill(0)
        for i, j, value in triplets:
            if not (0 <= i < rows and 0 <= j < cols):
                raise InputError(f"triplet position ({i}, {j}) outside {rows}x{cols}")
            table[i, j] = table[i, j] + _exact(value)
        return cls(table)

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        return self._entries[index]

    def is_integral(self) -> bool:
        return all(not isinstance(x, Fraction) for x in self._entries.flat)

    def max_abs(self) -> Scalar:
        return max((abs(x) for x in self._entries.flat), default=0)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self._entries.T.copy())

    def select_columns(self, indices: Sequence[int]) -> "ExactMatrix":
        table = np.empty((self.rows, len(indices)), dtype=object)
        for k, j in enumerate(indices):
            table[:, k] = self._entries[:, j]
        return ExactMatrix(table)

    def compose(self, other: "ExactMatrix") -> "ExactMatrix":
        """Matrix product ``self @ other``."""
        if self.cols != other.rows:
            raise InputError(f"cannot compose {self.shape} with {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return ExactMatrix.zeros(self.rows, other.cols)
        if (
            self.is_integral()
            and other.is_integral()
            and self.max_abs() * other.max_abs() * self.cols < _INT64_SAFE
        ):
            product = self._entries.astype(np.int64) @ other.entries.astype(np.int64)
            return ExactMatrix(product.astype(object))
        return ExactMatrix(np.dot(self._entries, other.entries))

    def is_zero(self, modulus: int = 0) -> bool:
        """All entries vanish (mod ``modulus`` when it is nonzero)."""
        if modulus:
            return all(x % modulus == 0 for x in self._entries.flat)
        return all(x == 0 for x in self._entries.flat)

    def sparse_rows(self) -> List[Dict[int, Scalar]]:
        """Nonzero entries of each row as ``{col: value}``."""
        out = []
        for i in range(self.rows):
            row = self._entries[i]
            out.append({j: row[j] for j in range(self.cols) if row[j] != 0})
        return out

    def to_lists(self) -> List[List[Scalar]]:
        return [list(row) for row in self._entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for a, b in zip(self._entries.flat, other.entries.flat)
        )

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self._entries.flat)))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.to_lists()!r})"

    def __reduce__(self):
        return (ExactMatrix.from_rows, (self.to_lists(), self.cols))
