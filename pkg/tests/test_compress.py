"""Tests for compression operators and lower-bound certificates."""

import itertools

import numpy as np
import pytest

from face_ring.compress.certificate import (
    CompressionPolicy,
    check_non_extendable_characterization,
    compress,
    final_face,
    is_full_simplex,
    reachable_final_faces,
)
from face_ring.compress.operators import (
    compress_op,
    dual_compress_op,
    epsilon_k,
    extendable_coordinates,
    is_extendable,
)
from face_ring.error_handling.errors import InputError, NicenessError
from face_ring.powerset.functions import SubsetFn, coordinate, delta, mobius, mu, one
from face_ring.powerset.subset import Subset, submasks
from face_ring.simplicial.complex import (
    boundary_of_simplex,
    enumerate_complexes,
    from_support,
    full_simplex,
    indicator,
    point_complex,
    random_complex,
)


def test_epsilon_adjoins_an_element():
    assert epsilon_k(Subset.of(3, [1]), 3) == Subset.of(3, [1, 3])
    assert epsilon_k(Subset.of(3, [1]), 1) == Subset.of(3, [1])
    with pytest.raises(InputError):
        epsilon_k(Subset.of(3, [1]), 4)


def test_compression_gives_the_closed_star(rng):
    """supp(E_k f) is the closed star of vertex k."""
    for _ in range(20):
        K = random_complex(5, rng)
        f = indicator(K)
        for k in K.vertices():
            assert from_support(compress_op(f, k)) == K.star(1 << (k - 1))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_mobius_intertwines_the_two_operators(rng, k):
    """M(E_k f) = E_k*(M f) for arbitrary f."""
    for _ in range(20):
        f = SubsetFn(4, rng.integers(0, 2, size=16))
        assert mobius(compress_op(f, k)) == dual_compress_op(mobius(f), k)


def test_extendability_on_triangle_boundary(triangle_boundary):
    """Every vertex of a circle is extendable."""
    f = indicator(triangle_boundary)
    assert extendable_coordinates(f) == [1, 2, 3]
    assert all(is_extendable(f, k) for k in (1, 2, 3))


def test_no_extendable_coordinate_on_cones_or_ghosts():
    f = indicator(full_simplex(3))
    assert extendable_coordinates(f) == []
    assert not is_extendable(indicator(point_complex(2)), 1)


def test_extendability_requires_niceness():
    with pytest.raises(NicenessError):
        is_extendable(SubsetFn.from_masks(2, [0b11]), 1)


@pytest.mark.parametrize("policy", list(CompressionPolicy))
def test_certificate_for_triangle_boundary(policy, triangle_boundary):
    """Compression ends at an edge, giving the bound 2 = |supp M(f)|."""
    certificate = compress(indicator(triangle_boundary), policy)
    assert certificate.steps == (1, 2)
    assert certificate.final_face == Subset.of(3, [1, 2])
    assert certificate.bound == 2
    assert certificate.mobius_support_size == 2
    assert certificate.dimension_bound == 2
    assert [step.support_size for step in certificate.trace] == [6, 4]
    assert certificate.holds
    assert certificate.to_dict()["final_face"] == [1, 2]


def test_certificate_for_point_complex():
    """{∅} is already a full power set; the bound is 2^m."""
    certificate = compress(indicator(point_complex(3)))
    assert certificate.steps == ()
    assert certificate.final_face == Subset(0, 3)
    assert certificate.bound == 8 == certificate.mobius_support_size
    assert certificate.holds


def test_compress_rejects_non_nice():
    with pytest.raises(NicenessError):
        compress(SubsetFn.zero(3))


def test_policy_parse():
    assert CompressionPolicy.parse("GREEDY") is CompressionPolicy.GREEDY
    with pytest.raises(InputError):
        CompressionPolicy.parse("random")


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_certificates_exhaustive(m):
    """Every complex on [m] yields a valid certificate under both policies."""
    for K in enumerate_complexes(m):
        f = indicator(K)
        assert check_non_extendable_characterization(f), str(K)
        for policy in CompressionPolicy:
            certificate = compress(f, policy)
            assert certificate.holds, (str(K), policy)
            assert K.contains(certificate.final_face)


def test_certificates_random(rng):
    for _ in range(40):
        K = random_complex(6, rng)
        for policy in CompressionPolicy:
            assert compress(indicator(K), policy).holds, str(K)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_reachable_final_faces_are_the_maximal_faces(m):
    """Some compression order reaches every maximal face, and nothing else."""
    for K in enumerate_complexes(m):
        assert reachable_final_faces(indicator(K)) == set(K.maximal_faces), str(K)


def test_full_simplex_detection():
    assert is_full_simplex(indicator(full_simplex(3)))
    assert not is_full_simplex(indicator(boundary_of_simplex(3)))
    assert not is_full_simplex(SubsetFn.zero(2))
    assert final_face(indicator(boundary_of_simplex(3))) == 0b111


def power_set_of(m, a):
    return SubsetFn.from_masks(m, submasks(a))


def support_union(f):
    union = 0
    for mask in f.support_masks():
        union |= mask
    return union


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_compression_of_mu_drops_the_coordinate(m):
    """E_k(mu_a) = mu_{a - {k}} and E_k*(delta_a) = delta_{a - {k}}."""
    for a in range(1 << m):
        for k in range(1, m + 1):
            without_k = a & ~(1 << (k - 1))
            assert compress_op(mu(m, a), k) == mu(m, without_k)
            assert dual_compress_op(delta(m, a), k) == delta(m, without_k)


def test_compression_kills_delta_of_the_empty_set():
    """E_k(delta_∅) = 0."""
    for m in range(1, 6):
        for k in range(1, m + 1):
            assert compress_op(delta(m, 0), k) == SubsetFn.zero(m)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_dual_compression_vanishes_on_k_and_shrinks_support(rng, m):
    """E_k*(g) * x_k = 0 and |supp E_k*(f)| <= |supp f|."""
    for _ in range(30):
        g = SubsetFn(m, rng.integers(0, 2, size=1 << m))
        for k in range(1, m + 1):
            image = dual_compress_op(g, k)
            assert not image * coordinate(m, k)
            assert image.support_size() <= g.support_size()


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_compression_at_an_extendable_coordinate_changes_f(m):
    for K in enumerate_complexes(m):
        f = indicator(K)
        for k in extendable_coordinates(f):
            assert compress_op(f, k) != f, (str(K), k)


@pytest.mark.parametrize("policy", list(CompressionPolicy))
def test_compression_trace_is_monotone(rng, policy):
    """supp(f_t) shrinks strictly and supp(M f_t) never grows along a run."""
    for m in (5, 6):
        for _ in range(30):
            f = indicator(random_complex(m, rng))
            certificate = compress(f, policy)
            sizes = [f.support_size()] + [step.support_size for step in certificate.trace]
            mobius_sizes = [certificate.mobius_support_size] + [step.mobius_support_size for step in certificate.trace]
            assert all(later < earlier for earlier, later in zip(sizes, sizes[1:]))
            assert all(later <= earlier for earlier, later in zip(mobius_sizes, mobius_sizes[1:]))
            assert len(certificate.trace) == len(certificate.steps)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_mobius_of_a_power_set_is_the_complementary_power_set(m):
    """supp(f) = 2^a exactly when supp(M f) = 2^{[m] - a}."""
    full = (1 << m) - 1
    for a in range(1 << m):
        assert mobius(power_set_of(m, a)) == power_set_of(m, full & ~a)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_power_set_duality_over_every_function(m):
    full = (1 << m) - 1
    for bits in itertools.product((0, 1), repeat=1 << m):
        f = SubsetFn(m, np.array(bits, dtype=np.uint8))
        transform = mobius(f)
        assert is_full_simplex(f) == is_full_simplex(transform), bits
        if is_full_simplex(f):
            assert support_union(transform) == full & ~support_union(f)


@pytest.mark.parametrize("m", [1, 3, 6])
def test_compressing_the_constant_function(m):
    """1 is already the full power set: no steps, a_0 = [m]."""
    certificate = compress(one(m))
    assert certificate.steps == ()
    assert certificate.trace == ()
    assert certificate.final_face == Subset.full(m)
    assert certificate.bound == 1 == certificate.mobius_support_size
    assert certificate.holds
