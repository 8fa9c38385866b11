"""Tests for subgroup freeness and the 2^r lower bound."""

import pytest

from face_ring.error_handling.errors import InputError, SizeError
from face_ring.freeness.criteria import (
    is_free,
    is_free_all_faces,
    max_free_rank_real,
    orbit_free_on_cells,
    rank_bound,
)
from face_ring.freeness.halperin_carlsson import hc_verify
from face_ring.freeness.subgroup import SubgroupKind, SubgroupSpec, echelon_subgroups
from face_ring.linalg.snf import smith_normal_form
from face_ring.linalg.matrix import FieldTag
from face_ring.simplicial.complex import (
    boundary_of_simplex,
    enumerate_complexes,
    from_maximal_faces,
    full_simplex,
    point_complex,
    random_complex,
)
from face_ring.threading.process_pool import ProcessPool


@pytest.mark.parametrize("m", range(2, 9))
@pytest.mark.parametrize("kind", [SubgroupKind.REAL, SubgroupKind.TORUS])
def test_diagonal_acts_freely_on_spheres(m, kind):
    K = boundary_of_simplex(m)
    H = SubgroupSpec.diagonal(kind, m)
    assert is_free(H, K)
    report = hc_verify(K, H, FieldTag.GF2)
    assert report.free
    assert report.total_dim == 2 == report.lower_bound
    assert report.rank_bound == 1
    assert report.holds


def test_full_simplex_admits_no_free_action():
    K = full_simplex(3)
    H = SubgroupSpec.diagonal(SubgroupKind.TORUS, 3)
    assert not is_free(H, K)
    report = hc_verify(K, H, FieldTag.RATIONAL)
    assert not report.free
    assert report.bound_holds is None
    assert report.rank_bound_holds is None
    assert report.holds


def test_full_real_group_on_empty_complex():
    K = point_complex(3)
    H = SubgroupSpec.full_real(3)
    report = hc_verify(K, H, FieldTag.GF2)
    assert report.free
    assert report.total_dim_rzk == 8 == report.lower_bound
    assert report.to_dict()["bound_holds"] is True


def test_torus_freeness_needs_unit_factors():
    """(2, 0) has an order-two element with a fixed point; (1, 0) does not."""
    K = point_complex(2)
    assert not is_free(SubgroupSpec.from_rows("torus", [[2, 0]], 2), K)
    assert is_free(SubgroupSpec.from_rows("torus", [[1, 0]], 2), K)
    assert is_free(SubgroupSpec.from_rows("torus", [[1, 1]], 2), from_maximal_faces(2, [[1], [2]]))


def test_freeness_requires_matching_ground_sets(triangle_boundary):
    with pytest.raises(InputError):
        is_free(SubgroupSpec.diagonal("real", 4), triangle_boundary)


def test_subgroup_validation():
    with pytest.raises(InputError) as info:
        SubgroupSpec.from_rows("real", [[1, 2]], 2)
    assert info.value.position == "generators[0][1]"
    with pytest.raises(InputError):
        SubgroupSpec.from_rows("real", [[1, 1], [1, 1]], 2)
    with pytest.raises(InputError):
        SubgroupSpec.from_rows("torus", [[2, 4], [1, 2]], 2)
    with pytest.raises(InputError):
        SubgroupKind.parse("complex")


def test_real_subgroup_elements():
    H = SubgroupSpec.from_rows("real", [[1, 1, 0], [0, 1, 1]], 3)
    assert sorted(H.elements()) == [0b011, 0b101, 0b110]
    assert H.to_dict() == {"kind": "real", "r": 2, "generators": [[1, 1, 0], [0, 1, 1]]}


@pytest.mark.parametrize("r, expected", [(0, 1), (1, 15), (2, 35), (3, 15), (4, 1)])
def test_echelon_subgroup_counts(r, expected):
    """Rank-r subspaces of GF(2)^4 are counted by Gaussian binomials."""
    assert len(list(echelon_subgroups(r, 4))) == expected


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_freeness_criteria_agree_exhaustive(m):
    """Maximal faces, all faces and the literal fixed-point check give the same verdict."""
    subgroups = [H for r in range(m + 1) for H in echelon_subgroups(r, m)]
    for K in enumerate_complexes(m):
        for H in subgroups:
            verdict = is_free(H, K)
            assert verdict == is_free_all_faces(H, K)
            assert verdict == orbit_free_on_cells(H, K)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_free_rank_within_bound_exhaustive(m):
    for K in enumerate_complexes(m):
        r, H = max_free_rank_real(K)
        assert r <= max(rank_bound(K), 0)
        assert H.r == r and is_free(H, K)
        assert hc_verify(K, H, FieldTag.GF2).holds


def test_free_rank_of_known_complexes(triangle_boundary):
    assert max_free_rank_real(point_complex(4))[0] == 4
    assert max_free_rank_real(triangle_boundary)[0] == 1
    assert max_free_rank_real(full_simplex(2))[0] == 0


def test_free_rank_search_limit():
    with pytest.raises(SizeError):
        max_free_rank_real(point_complex(7))


def test_free_rank_through_worker_pool(path_complex):
    with ProcessPool(max_workers=2, parallel_threshold=1) as pool:
        r, H = max_free_rank_real(path_complex, pool=pool)
    assert r == max_free_rank_real(path_complex)[0] == 1
    assert is_free(H, path_complex)


def test_every_subgroup_of_rank_up_to_four_is_enumerated():
    """167 complexes on [4] meet 67 echelon subgroups in the exhaustive check."""
    assert sum(1 for r in range(5) for _ in echelon_subgroups(r, 4)) == 67


def test_free_rank_witness_random(rng):
    """The searched witness satisfies the lower bound on 100 random complexes."""
    for n in range(100):
        K = random_complex(5 + n % 2, rng)
        r, H = max_free_rank_real(K)
        assert H.r == r <= max(rank_bound(K), 0)
        report = hc_verify(K, H, FieldTag.GF2)
        assert report.free and report.holds, str(K)


def test_freeness_passes_to_subcomplexes_exhaustive():
    """A subgroup free on K stays free on every subcomplex of K on the same ground set."""
    m = 3
    complexes = list(enumerate_complexes(m))
    subgroups = [H for r in range(m + 1) for H in echelon_subgroups(r, m)]
    for K in complexes:
        smaller = [L for L in complexes if L.faces <= K.faces]
        for H in subgroups:
            if is_free(H, K):
                assert all(is_free(H, L) for L in smaller), (str(K), H.rows())


def test_freeness_passes_to_subcomplexes_random(rng):
    m = 5
    subgroups = [H for r in range(1, 4) for H in echelon_subgroups(r, m)]
    for _ in range(40):
        K = random_complex(m, rng)
        faces = sorted(K.faces)
        kept = [faces[i] for i in rng.choice(len(faces), size=len(faces) // 2, replace=False)]
        L = from_maximal_faces(m, [[e + 1 for e in range(m) if mask >> e & 1] for mask in kept])
        assert L.faces <= K.faces
        for H in (subgroups[int(i)] for i in rng.choice(len(subgroups), size=20, replace=False)):
            if is_free(H, K):
                assert is_free(H, L)
        torus = SubgroupSpec.diagonal(SubgroupKind.TORUS, m)
        if is_free(torus, K):
            assert is_free(torus, L)


@pytest.mark.parametrize("m", range(2, 7))
def test_torus_diagonal_has_unit_invariant_factors_off_each_facet(m):
    """Off every maximal face of the sphere the diagonal block has Smith form (1)."""
    K = boundary_of_simplex(m)
    H = SubgroupSpec.diagonal(SubgroupKind.TORUS, m)
    for face in K.maximal_faces:
        columns = [p for p in range(m) if not face >> p & 1]
        assert smith_normal_form(H.generators.select_columns(columns)) == [1]
    assert is_free(H, K)
    doubled = SubgroupSpec.from_rows(SubgroupKind.TORUS, [[2] * m], m)
    assert smith_normal_form(doubled.generators.select_columns([0])) == [2]
    assert not is_free(doubled, K)
