"""Subsets of the ground set [m] encoded as bit masks."""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from ..error_handling.errors import InputError, SizeError


MAX_GROUND_SET = 25


def check_ground_set(m: int, limit: int = MAX_GROUND_SET) -> None:
    """
    Validate a ground-set size.

    Args:
        m: Number of elements of [m]
        limit: Largest accepted size

    Raises:
        SizeError: If m lies outside [1, limit]
    """
    if not isinstance(m, int) or m < 1 or m > limit:
        raise SizeError(f"ground-set size must lie in [1, {limit}], got {m!r}")


def popcount(mask: int) -> int:
    """Number of elements of a mask."""
    return bin(mask).count("1")


def mask_elements(mask: int) -> Tuple[int, ...]:
    """1-based elements of a mask in increasing order."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def elements_mask(m: int, elements: Iterable[int]) -> int:
    """
    Mask of a collection of 1-based elements.

    Raises:
        InputError: If an element lies outside [m]
    """
    mask = 0
    for pos, element in enumerate(elements):
        if isinstance(element, bool) or not isinstance(element, int):
            raise InputError(f"element {element!r} is not an integer", position=f"[{pos}]")
        if element < 1 or element > m:
            raise InputError(f"element {element} outside [1, {m}]", position=f"[{pos}]")
        mask |= 1 << (element - 1)
    return mask


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including ``mask`` and 0, in decreasing order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def canonical_order(masks: Iterable[int]) -> List[int]:
    """Sort masks by cardinality, then by canonical index."""
    return sorted(masks, key=lambda mask: (popcount(mask), mask))


@dataclass(frozen=True, order=False)
class Subset:
    """
    A subset of [m].

    Element ``i`` is present iff binary digit ``i - 1`` of ``mask`` is set, so
    ``mask`` doubles as the canonical index of the subset in every table.
    """

    mask: int
    m: int

    def __post_init__(self) -> None:
        check_ground_set(self.m)
        if self.mask < 0 or self.mask >> self.m:
            raise InputError(f"mask {self.mask} has elements outside [1, {self.m}]")

    @classmethod
    def of(cls, m: int, elements: Iterable[int] = ()) -> "Subset":
        """Build a subset from 1-based elements."""
        return cls(elements_mask(m, elements), m)

    @classmethod
    def full(cls, m: int) -> "Subset":
        return cls((1 << m) - 1, m)

    @property
    def elements(self) -> Tuple[int, ...]:
        return mask_elements(self.mask)

    @property
    def index(self) -> int:
        return self.mask

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.m and bool(self.mask >> (element - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def issubset(self, other: "Subset") -> bool:
        return self.mask & ~other.mask == 0

    def union(self, other: "Subset") -> "Subset":
        return Subset(self.mask | other.mask, self.m)

    def intersection(self, other: "Subset") -> "Subset":
        return Subset(self.mask & other.mask, self.m)

    def difference(self, other: "Subset") -> "Subset":
        return Subset(self.mask & ~other.mask, self.m)

    def complement(self) -> "Subset":
        return Subset(((1 << self.m) - 1) & ~self.mask, self.m)

    def sort_key(self) -> Tuple[int, int]:
        return (len(self), self.mask)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"
