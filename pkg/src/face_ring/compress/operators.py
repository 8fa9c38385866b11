"""Compression operators E_k, their Möbius duals and extendability."""

import logging

from ..error_handling.errors import InputError
from ..powerset.functions import SubsetFn, coordinate, mobius, require_nice
from ..powerset.subset import Subset


logger = logging.getLogger(__name__)


def _check_element(k: int, m: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= m:
        raise InputError(f"coordinate {k!r} outside [1, {m}]")
    return 1 << (k - 1)


def epsilon_k(a: Subset, k: int) -> Subset:
    """a ∪ {k}."""
    return Subset(a.mask | _check_element(k, a.m), a.m)


def compress_op(f: SubsetFn, k: int) -> SubsetFn:
    """E_k(f) = f ∘ epsilon_k, i.e. a ↦ f(a ∪ {k})."""
    bit = _check_element(k, f.m)
    table = f.to_array()
    view = table.reshape(-1, 2, bit)
    view[:, 0, :] = view[:, 1, :]
    return SubsetFn(f.m, table)


def dual_compress_op(f: SubsetFn, k: int) -> SubsetFn:
    """
    Linear extension of delta_a ↦ delta_{a - {k}}.

    Subsets containing k receive nothing; a subset b without k collects
    f(b) + f(b ∪ {k}).
    """
    bit = _check_element(k, f.m)
    table = f.to_array()
    view = table.reshape(-1, 2, bit)
    view[:, 0, :] ^= view[:, 1, :]
    view[:, 1, :] = 0
    return SubsetFn(f.m, table)


def is_extendable(f: SubsetFn, k: int) -> bool:
    """
    f({k}) = 1 and M(f)·x_k ≠ 0.

    Raises:
        NicenessError: If f is not nice
    """
    bit = _check_element(k, f.m)
    require_nice(f)
    if not f(bit):
        return False
    return bool(mobius(f) * coordinate(f.m, k))


def extendable_coordinates(f: SubsetFn) -> list:
    """All k at which a nice f is extendable, increasing."""
    require_nice(f)
    transform = mobius(f)
    out = []
    for k in range(1, f.m + 1):
        if f(1 << (k - 1)) and (transform * coordinate(f.m, k)):
            out.append(k)
    return out
