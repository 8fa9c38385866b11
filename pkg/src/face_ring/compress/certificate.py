"""Compression runs and the Möbius-support lower-bound certificate."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Set, Tuple

from ..error_handling.errors import InputError
from ..powerset.functions import SubsetFn, mobius, require_nice
from ..powerset.subset import Subset, popcount
from .operators import compress_op, extendable_coordinates


logger = logging.getLogger(__name__)


class CompressionPolicy(str, Enum):
    """Which extendable coordinate a compression step uses."""

    SMALLEST = "smallest"
    GREEDY = "greedy"

    @classmethod
    def parse(cls, text) -> "CompressionPolicy":
        if isinstance(text, CompressionPolicy):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError as e:
            raise InputError(f"unknown compression policy {text!r} (smallest or greedy)") from e


@dataclass(frozen=True)
class CompressionStep:
    k: int
    support_size: int
    mobius_support_size: int


@dataclass(frozen=True)
class CompressionCertificate:
    """
    Result of compressing a nice f down to the indicator of a full simplex.

    Attributes:
        m: Ground-set size
        steps: Coordinates used, in order
        final_face: a_0 with supp(f_0) = 2^{a_0}
        bound: 2^{m - |a_0|}
        mobius_support_size: |supp(M(f))| of the original f
        trace: Sizes of supp(f_t) and supp(M(f_t)) after every step
        final_is_simplex: supp(f_0) is the full power set of a_0
        face_in_support: a_0 lies in supp(f)
        dimension_bound: 2^{m - dim - 1}, the weaker bound from the dimension alone
    """

    m: int
    steps: Tuple[int, ...]
    final_face: Subset
    bound: int
    mobius_support_size: int
    trace: Tuple[CompressionStep, ...]
    final_is_simplex: bool
    face_in_support: bool
    dimension_bound: int

    @property
    def holds(self) -> bool:
        return (
            self.final_is_simplex
            and self.face_in_support
            and self.mobius_support_size >= self.bound >= self.dimension_bound
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "steps": list(self.steps),
            "final_face": list(self.final_face.elements),
            "bound": self.bound,
            "dimension_bound": self.dimension_bound,
            "mobius_support_size": self.mobius_support_size,
            "holds": self.holds,
        }


def _choose(f: SubsetFn, candidates: List[int], policy: CompressionPolicy) -> int:
    if policy is CompressionPolicy.SMALLEST:
        return candidates[0]
    return min(candidates, key=lambda k: (compress_op(f, k).support_size(), k))


def final_face(f: SubsetFn) -> int:
    """Mask of {k : f({k}) = 1}."""
    mask = 0
    for k in range(f.m):
        if f(1 << k):
            mask |= 1 << k
    return mask


def compress(f: SubsetFn, policy: CompressionPolicy = CompressionPolicy.SMALLEST) -> CompressionCertificate:
    """
    Apply E_k at extendable coordinates until none remain.

    Each step strictly shrinks the support, so the loop ends after at most
    |supp(f)| steps.

    Raises:
        NicenessError: If f is not nice
    """
    policy = CompressionPolicy.parse(policy)
    require_nice(f)
    original_support = f.support_size()
    mobius_size = mobius(f).support_size()
    dimension = max(popcount(mask) for mask in f.support_masks()) - 1

    current = f
    steps: List[int] = []
    trace: List[CompressionStep] = []
    while True:
        candidates = extendable_coordinates(current)
        if not candidates:
            break
        k = _choose(current, candidates, policy)
        nxt = compress_op(current, k)
        if nxt.support_size() >= current.support_size():
            raise AssertionError(f"compression at {k} did not shrink the support")
        current = nxt
        steps.append(k)
        trace.append(CompressionStep(k, current.support_size(), mobius(current).support_size()))

    a0 = final_face(current)
    size = popcount(a0)
    certificate = CompressionCertificate(
        m=f.m,
        steps=tuple(steps),
        final_face=Subset(a0, f.m),
        bound=1 << (f.m - size),
        mobius_support_size=mobius_size,
        trace=tuple(trace),
        final_is_simplex=is_full_simplex(current),
        face_in_support=bool(f(a0)),
        dimension_bound=1 << (f.m - dimension - 1),
    )
    logger.debug(
        f"compression ({policy.value}) of support {original_support}: steps={steps}, "
        f"a0={certificate.final_face}, bound={certificate.bound} <= {mobius_size}"
    )
    return certificate


def is_full_simplex(f: SubsetFn) -> bool:
    """supp(f) = 2^{a} for some a."""
    masks = f.support_masks()
    if not masks:
        return False
    union = 0
    for mask in masks:
        union |= mask
    return len(masks) == 1 << popcount(union) and all(mask & ~union == 0 for mask in masks)


def check_non_extendable_characterization(f: SubsetFn) -> bool:
    """
    (f is extendable nowhere) ⇔ (supp(f) is the power set of some a_0).

    Raises:
        NicenessError: If f is not nice
    """
    return (not extendable_coordinates(f)) == is_full_simplex(f)


def reachable_final_faces(f: SubsetFn) -> Set[int]:
    """Masks a_0 reachable by some order of compression steps."""
    require_nice(f)
    seen: Set[SubsetFn] = set()
    finals: Set[int] = set()
    stack = [f]
    while stack:
        current = stack.pop()
        if current in seen:
            continue
        seen.add(current)
        candidates = extendable_coordinates(current)
        if not candidates:
            finals.add(final_face(current))
        stack.extend(compress_op(current, k) for k in candidates)
    logger.debug(f"{len(seen)} compression states explored, {len(finals)} final faces")
    return finals
