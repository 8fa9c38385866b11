"""Tests for subsets, subset functions and the Möbius transform."""

import itertools

import numpy as np
import pytest

from face_ring.error_handling.errors import InputError, NicenessError, SizeError
from face_ring.powerset.functions import (
    BasisKind,
    SubsetFn,
    as_polynomial,
    coordinate,
    delta,
    find_niceness_violation,
    is_nice,
    make_basis,
    mobius,
    mobius_naive,
    mu,
    mu_expansion,
    one,
    require_nice,
    support,
)
from face_ring.powerset.subset import Subset, canonical_order, check_ground_set, elements_mask, submasks


def random_fn(rng, m):
    return SubsetFn(m, rng.integers(0, 2, size=1 << m, dtype=np.uint8))


def test_subset_mask_encoding():
    """Element i is bit i - 1 and the mask is the canonical index."""
    a = Subset.of(4, [1, 3])
    assert a.mask == 0b0101
    assert a.index == 5
    assert a.elements == (1, 3)
    assert str(a) == "{1,3}"
    assert 3 in a and 2 not in a
    assert len(a) == 2
    assert a.complement() == Subset.of(4, [2, 4])


def test_subset_set_operations():
    """Union, intersection and difference stay on the same ground set."""
    a, b = Subset.of(3, [1, 2]), Subset.of(3, [2, 3])
    assert a.union(b) == Subset.full(3)
    assert a.intersection(b) == Subset.of(3, [2])
    assert a.difference(b) == Subset.of(3, [1])
    assert Subset.of(3, [2]).issubset(a)


@pytest.mark.parametrize("m", [0, 26, -1])
def test_ground_set_limits(m):
    """Ground sets outside [1, 25] are rejected."""
    with pytest.raises(SizeError):
        check_ground_set(m)


def test_elements_outside_ground_set_carry_position():
    """A bad element reports its position."""
    with pytest.raises(InputError) as excinfo:
        elements_mask(3, [1, 4])
    assert excinfo.value.position == "[1]"


def test_canonical_order_and_submasks():
    """Subsets sort by size then index; submasks enumerate the power set."""
    assert canonical_order([0b11, 0b100, 0, 0b1]) == [0, 0b1, 0b100, 0b11]
    assert sorted(submasks(0b101)) == [0, 0b1, 0b100, 0b101]


def test_basis_functions():
    """delta, mu, coordinate and one have the expected supports."""
    m = 3
    assert support(delta(m, 0b010)) == [Subset(0b010, m)]
    assert mu(m, 0b001).support_masks() == [0b001, 0b011, 0b101, 0b111]
    assert coordinate(m, 2) == mu(m, 0b010)
    assert one(m) == mu(m, 0)
    assert make_basis(BasisKind("one"), m).support_size() == 8


def test_basis_kind_validation():
    """Basis tags check their parameters."""
    with pytest.raises(InputError):
        BasisKind("delta")
    with pytest.raises(InputError):
        BasisKind("one", 3)
    with pytest.raises(InputError):
        make_basis(BasisKind("coordinate", 4), 3)


def test_ring_operations():
    """+ is pointwise XOR and * pointwise AND."""
    m = 2
    x1, x2 = coordinate(m, 1), coordinate(m, 2)
    assert (x1 * x2) == mu(m, 0b11)
    assert (x1 + x1) == SubsetFn.zero(m)
    assert not SubsetFn.zero(m)
    assert x1(Subset.of(m, [1])) == 1


@pytest.mark.parametrize("m", range(1, 13))
def test_mobius_is_involution(rng, m):
    """M(M(f)) = f."""
    for _ in range(1000):
        f = random_fn(rng, m)
        assert mobius(mobius(f)) == f


@pytest.mark.parametrize("m", range(1, 7))
def test_mobius_matches_definition_on_basis(m):
    """The butterfly agrees with the O(4^m) definition on every delta and mu."""
    for mask in range(1 << m):
        for f in (delta(m, mask), mu(m, mask)):
            assert mobius(f) == mobius_naive(f)


@pytest.mark.parametrize("m", [2, 5, 8])
def test_mobius_is_linear(rng, m):
    """M(f + g) = M(f) + M(g)."""
    for _ in range(100):
        f, g = random_fn(rng, m), random_fn(rng, m)
        assert mobius(f + g) == mobius(f) + mobius(g)


def test_mobius_keeps_the_value_at_the_empty_set(rng):
    """M(f)(∅) = f(∅); in particular f(∅) = 1 gives M(f)(∅) = 1."""
    for m in range(1, 9):
        for _ in range(50):
            f = random_fn(rng, m)
            assert mobius(f)(0) == f(0)
        assert mobius(one(m) + delta(m, (1 << m) - 1))(0) == 1


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_delta_mu_change_of_basis_is_self_inverse(m):
    """The matrix of mu_a in the delta basis squares to the identity mod 2."""
    change = np.array([mu(m, mask).to_array() for mask in range(1 << m)], dtype=np.int64)
    assert np.array_equal(change @ change % 2, np.eye(1 << m, dtype=np.int64))


def test_mobius_matches_definition_random(rng):
    """The butterfly agrees with the definition on random functions."""
    for m in (5, 6):
        for _ in range(20):
            f = random_fn(rng, m)
            assert mobius(f) == mobius_naive(f)


@pytest.mark.parametrize("m", [1, 3, 5])
def test_mobius_exchanges_delta_and_mu(m):
    """M(delta_a) = mu_a."""
    for mask in range(1 << m):
        assert mobius(delta(m, mask)) == mu(m, mask)
        assert mobius(mu(m, mask)) == delta(m, mask)


def test_mobius_of_one_is_delta_empty():
    """M(1) = delta_∅."""
    assert mobius(one(4)) == delta(4, 0)


def test_niceness():
    """Nice means nonzero with downward-closed support."""
    assert is_nice(delta(3, 0))
    assert is_nice(SubsetFn.from_masks(3, [0, 1, 2, 3]))
    assert not is_nice(SubsetFn.zero(3))
    assert find_niceness_violation(SubsetFn.zero(3)) == (None, None)
    a, b = find_niceness_violation(delta(3, 0b011))
    assert b & ~a == 0 and a != b
    assert delta(3, 0b011)(a) == 1 and delta(3, 0b011)(b) == 0


def test_require_nice_names_the_witness():
    """The raised error carries a face and a missing subface."""
    with pytest.raises(NicenessError) as excinfo:
        require_nice(SubsetFn.from_masks(2, [0, 0b11]))
    assert excinfo.value.face == Subset(0b11, 2)
    assert excinfo.value.missing.issubset(excinfo.value.face)
    with pytest.raises(NicenessError):
        require_nice(SubsetFn.zero(2))


def test_mu_expansion_reconstructs_f(rng):
    """f is the sum of mu_a over supp(M(f))."""
    for m in (2, 4, 5):
        f = random_fn(rng, m)
        total = SubsetFn.zero(m)
        for a in mu_expansion(f):
            total = total + mu(m, a.mask)
        assert total == f


def test_polynomial_form():
    """Polynomial form lists square-free monomials."""
    assert as_polynomial(one(3) + delta(3, 0b111)) == "1 + x1x2x3"
    assert as_polynomial(coordinate(2, 2)) == "x2"
    assert as_polynomial(SubsetFn.zero(2)) == "0"


def test_functions_are_immutable():
    """Value tables are read-only."""
    f = one(2)
    with pytest.raises(ValueError):
        f.values[0] = 0
    with pytest.raises(ValueError):
        f.packed[0] = 0


def test_tables_are_packed_one_bit_per_subset(rng):
    """A function on [m] stores ceil(2^m / 8) bytes and unpacks to its values."""
    assert one(2).packed.nbytes == 1
    f = random_fn(rng, 12)
    assert f.packed.nbytes == (1 << 12) // 8
    assert f.to_array().shape == (1 << 12,)
    assert all(f(mask) == int(f.values[mask]) for mask in range(0, 1 << 12, 97))
    assert f.support_size() == int(f.values.sum())
    assert make_basis(BasisKind("coordinate", 3), 5).support_size() == 16


def test_exhaustive_small_ground_set():
    """Every function on [2] satisfies M(M(f)) = f and matches the definition."""
    for bits in itertools.product((0, 1), repeat=4):
        f = SubsetFn(2, np.array(bits, dtype=np.uint8))
        assert mobius(mobius(f)) == f
        assert mobius(f) == mobius_naive(f)
