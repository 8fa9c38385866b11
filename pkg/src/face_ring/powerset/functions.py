"""The algebra of Z/2Z-valued functions on the power set of [m]."""

import logging
from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple, Union

import numpy as np

from ..error_handling.errors import InputError, NicenessError
from .subset import Subset, canonical_order, check_ground_set, mask_elements, popcount


logger = logging.getLogger(__name__)

BasisTag = Literal["delta", "mu", "coordinate", "one"]


def _readonly(values: np.ndarray) -> np.ndarray:
    values.flags.writeable = False
    return values


_POPCOUNT8 = np.array([bin(byte).count("1") for byte in range(256)], dtype=np.uint8)


class SubsetFn:
    """
    A function f: 2^[m] -> {0, 1}.

    The value table is packed one bit per subset (little-endian bit order,
    indexed by the subset's mask), so a function on [25] holds 4 MiB.
    ``values`` unpacks it to one byte per subset for vectorized work.
    Instances are immutable; ``+`` and ``*`` are the pointwise operations mod 2.

    Example:
        >>> f = make_basis(BasisKind("mu", Subset.of(2, [1])), 2)
        >>> [f(b) for b in range(4)]
        [0, 1, 0, 1]
    """

    __slots__ = ("_m", "_bits")

    def __init__(self, m: int, values: np.ndarray) -> None:
        check_ground_set(m)
        table = np.asarray(values)
        if table.shape != (1 << m,):
            raise InputError(f"value table must have length 2^{m}, got shape {table.shape}")
        self._m = m
        self._bits = _readonly(np.packbits(table.astype(np.uint8) & 1, bitorder="little"))

    @classmethod
    def _from_bits(cls, m: int, bits: np.ndarray) -> "SubsetFn":
        fn = object.__new__(cls)
        fn._m = m
        fn._bits = _readonly(bits)
        return fn

    @classmethod
    def zero(cls, m: int) -> "SubsetFn":
        check_ground_set(m)
        return cls._from_bits(m, np.zeros(((1 << m) + 7) // 8, dtype=np.uint8))

    @classmethod
    def from_masks(cls, m: int, masks) -> "SubsetFn":
        """The sum of delta functions at the given masks (duplicates cancel)."""
        check_ground_set(m)
        table = np.zeros(1 << m, dtype=np.uint8)
        for mask in masks:
            table[mask] ^= 1
        return cls(m, table)

    @property
    def m(self) -> int:
        return self._m

    @property
    def packed(self) -> np.ndarray:
        """The read-only bit table, ceil(2^m / 8) bytes."""
        return self._bits

    def to_array(self) -> np.ndarray:
        """A fresh writable uint8 table of length 2^m."""
        return np.unpackbits(self._bits, count=1 << self._m, bitorder="little")

    @property
    def values(self) -> np.ndarray:
        return _readonly(self.to_array())

    def __call__(self, subset: Union[Subset, int]) -> int:
        mask = subset.mask if isinstance(subset, Subset) else subset
        return int(self._bits[mask >> 3]) >> (mask & 7) & 1

    def _check_compatible(self, other: "SubsetFn") -> None:
        if not isinstance(other, SubsetFn) or other.m != self._m:
            raise InputError("operands must be functions on the same ground set")

    def __add__(self, other: "SubsetFn") -> "SubsetFn":
        self._check_compatible(other)
        return SubsetFn._from_bits(self._m, self._bits ^ other.packed)

    def __mul__(self, other: "SubsetFn") -> "SubsetFn":
        self._check_compatible(other)
        return SubsetFn._from_bits(self._m, self._bits & other.packed)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubsetFn):
            return NotImplemented
        return self._m == other.m and np.array_equal(self._bits, other.packed)

    def __hash__(self) -> int:
        return hash((self._m, self._bits.tobytes()))

    def __bool__(self) -> bool:
        return bool(self._bits.any())

    def support_size(self) -> int:
        return int(_POPCOUNT8[self._bits].sum(dtype=np.int64))

    def support_masks(self) -> List[int]:
        return canonical_order(int(i) for i in np.flatnonzero(self.to_array()))

    def __repr__(self) -> str:
        return f"SubsetFn(m={self._m}, support={[str(s) for s in support(self)]})"

    def __reduce__(self):
        return (SubsetFn._from_bits, (self._m, np.array(self._bits)))


@dataclass(frozen=True)
class BasisKind:
    """
    Selects one of the distinguished functions of 2^[m]*.

    ``delta`` and ``mu`` take a Subset, ``coordinate`` a 1-based element,
    ``one`` takes no parameter.
    """

    tag: BasisTag
    parameter: Optional[Union[Subset, int]] = None

    def __post_init__(self) -> None:
        if self.tag not in ("delta", "mu", "coordinate", "one"):
            raise InputError(f"unknown basis tag {self.tag!r}")
        needs_parameter = self.tag != "one"
        if needs_parameter != (self.parameter is not None):
            raise InputError(f"basis tag {self.tag!r} parameter mismatch: {self.parameter!r}")
        if self.tag in ("delta", "mu") and not isinstance(self.parameter, Subset):
            raise InputError(f"basis tag {self.tag!r} needs a Subset parameter")
        if self.tag == "coordinate" and not isinstance(self.parameter, int):
            raise InputError("coordinate basis needs an element index")


def make_basis(kind: BasisKind, m: int) -> SubsetFn:
    """
    Build delta_a, mu_a, the coordinate function x_i or the constant 1.

    Raises:
        SizeError: If m is outside [1, 25]
        InputError: If the parameter does not belong to [m]
    """
    check_ground_set(m)
    size = 1 << m

    if kind.tag == "one":
        return SubsetFn(m, np.ones(size, dtype=np.uint8))

    if kind.tag == "coordinate":
        i = kind.parameter
        if not 1 <= i <= m:
            raise InputError(f"coordinate {i} outside [1, {m}]")
        table = np.zeros(size, dtype=np.uint8)
        table.reshape(-1, 2, 1 << (i - 1))[:, 1, :] = 1
        return SubsetFn(m, table)

    a = kind.parameter
    if a.m != m:
        raise InputError(f"subset {a} lives on [{a.m}], expected [{m}]")
    if kind.tag == "delta":
        table = np.zeros(size, dtype=np.uint8)
        table[a.mask] = 1
        return SubsetFn(m, table)
    # mu_a(b) = 1 iff a ⊆ b: clear every half where an element of a is missing
    table = np.ones(size, dtype=np.uint8)
    for e in mask_elements(a.mask):
        table.reshape(-1, 2, 1 << (e - 1))[:, 0, :] = 0
    return SubsetFn(m, table)


def delta(m: int, mask: int) -> SubsetFn:
    return make_basis(BasisKind("delta", Subset(mask, m)), m)


def mu(m: int, mask: int) -> SubsetFn:
    return make_basis(BasisKind("mu", Subset(mask, m)), m)


def coordinate(m: int, i: int) -> SubsetFn:
    return make_basis(BasisKind("coordinate", i), m)


def one(m: int) -> SubsetFn:
    return make_basis(BasisKind("one"), m)


def mobius(f: SubsetFn) -> SubsetFn:
    """
    Subset-sum transform mod 2: M(f)(a) = sum of f(b) over b ⊆ a.

    Dimension-by-dimension butterfly in O(m 2^m): reshaping the table so the
    middle axis is bit i, every subset containing i picks up its partner
    without i.
    """
    out = f.to_array()
    for i in range(f.m):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] ^= view[:, 0, :]
    return SubsetFn(f.m, out)


def mobius_naive(f: SubsetFn) -> SubsetFn:
    """Reference O(4^m) transform straight from the definition."""
    size = 1 << f.m
    values = f.values
    table = np.zeros(size, dtype=np.uint8)
    for a in range(size):
        acc = 0
        for b in range(size):
            if b & ~a == 0:
                acc ^= int(values[b])
        table[a] = acc
    return SubsetFn(f.m, table)


def support(f: SubsetFn) -> List[Subset]:
    """Subsets where f = 1, sorted by cardinality then canonical index."""
    return [Subset(mask, f.m) for mask in f.support_masks()]


def find_niceness_violation(f: SubsetFn) -> Optional[Tuple[Optional[int], Optional[int]]]:
    """
    Locate a witness that supp(f) is not a simplicial complex.

    Returns:
        ``None`` when f is nice, ``(None, None)`` for the zero function,
        otherwise masks ``(a, b)`` with ``b ⊂ a``, ``f(a) = 1`` and ``f(b) = 0``
    """
    values = f.values
    if not values.any():
        return (None, None)
    # Closure under removing one element at a time is equivalent to downward closure.
    for i in range(f.m):
        view = values.reshape(-1, 2, 1 << i)
        bad = np.argwhere((view[:, 1, :] == 1) & (view[:, 0, :] == 0))
        if len(bad):
            high, low = (int(x) for x in bad[0])
            a = (high << (i + 1)) | (1 << i) | low
            return (a, a ^ (1 << i))
    return None


def is_nice(f: SubsetFn) -> bool:
    """True iff supp(f) is nonempty and downward closed (hence contains ∅)."""
    return find_niceness_violation(f) is None


def require_nice(f: SubsetFn) -> None:
    """
    Raises:
        NicenessError: Naming a pair (a, b ⊆ a) with f(a) = 1 and f(b) = 0
    """
    violation = find_niceness_violation(f)
    if violation is None:
        return
    a, b = violation
    if a is None:
        raise NicenessError("the zero function is not nice: its support is empty")
    face, missing = Subset(a, f.m), Subset(b, f.m)
    raise NicenessError(
        f"support is not downward closed: f({face}) = 1 but f({missing}) = 0",
        face=face,
        missing=missing,
    )


def mu_expansion(f: SubsetFn) -> List[Subset]:
    """
    The subsets a with f = sum of mu_a.

    Since M(mu_a) = delta_a and M is an involution, these are exactly supp(M(f)).
    """
    return support(mobius(f))


def as_polynomial(f: SubsetFn) -> str:
    """
    Square-free polynomial form of f in the coordinate functions.

    Example:
        >>> as_polynomial(one(3) + delta(3, 0b111))
        '1 + x1x2x3'
    """
    terms = []
    for mask in mobius(f).support_masks():
        if mask == 0:
            terms.append("1")
        else:
            terms.append("".join(f"x{e}" for e in mask_elements(mask)))
    logger.debug(f"Polynomial form with {len(terms)} monomials (m={f.m})")
    return " + ".join(terms) if terms else "0"


def maximal_masks(masks) -> List[int]:
    """Inclusion-maximal members of a family of masks, in canonical order."""
    ordered = sorted(set(masks), key=lambda mask: -popcount(mask))
    kept: List[int] = []
    for mask in ordered:
        if not any(mask & ~bigger == 0 for bigger in kept):
            kept.append(mask)
    return canonical_order(kept)
