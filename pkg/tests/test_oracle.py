"""Tests for the product-cell models and their agreement with Betti tables."""

import pytest

from face_ring.error_handling.errors import InputError, SizeError
from face_ring.linalg.chain import homology_dims
from face_ring.linalg.matrix import FieldTag
from face_ring.macx.poincare import PoincarePolynomial
from face_ring.oracle.cells import CellModel, build_complex, oracle_poincare, product_cells
from face_ring.oracle.validate import cross_validate
from face_ring.simplicial.complex import (
    boundary_of_simplex,
    enumerate_complexes,
    from_maximal_faces,
    point_complex,
    random_complex,
)

FIELDS = [FieldTag.GF2, FieldTag.RATIONAL]


def test_cell_counts(triangle_boundary, empty_on_two):
    """Every product cell except the all-top one lies over a proper face."""
    assert len(product_cells(triangle_boundary, CellModel.INTERVAL)) == 26
    assert len(product_cells(triangle_boundary, CellModel.DISK2)) == 26
    assert len(product_cells(empty_on_two, CellModel.INTERVAL)) == 4


def test_cells_are_lexicographic(empty_on_two):
    assert product_cells(empty_on_two, CellModel.INTERVAL) == [(0, 0), (0, 1), (1, 0), (1, 1)]


@pytest.mark.parametrize("field", FIELDS)
def test_sphere_models(field, triangle_boundary):
    assert oracle_poincare(triangle_boundary, CellModel.INTERVAL, field) == PoincarePolynomial({0: 1, 2: 1})
    assert oracle_poincare(triangle_boundary, CellModel.DISK2, field) == PoincarePolynomial({0: 1, 5: 1})


@pytest.mark.parametrize(
    "m,field",
    [(m, field) for m in range(2, 6) for field in FIELDS] + [(6, FieldTag.GF2), (7, FieldTag.GF2)],
)
def test_boundary_of_simplex_gives_spheres(m, field):
    """The boundary of the simplex on [m] gives S^{2m-1} in the disk model and S^{m-1} in the interval model."""
    K = boundary_of_simplex(m)
    assert oracle_poincare(K, CellModel.DISK2, field) == PoincarePolynomial({0: 1, 2 * m - 1: 1})
    assert oracle_poincare(K, CellModel.INTERVAL, field) == PoincarePolynomial({0: 1, m - 1: 1})


def test_two_points_give_three_sphere():
    K = from_maximal_faces(2, [[1], [2]])
    assert oracle_poincare(K, CellModel.DISK2, FieldTag.RATIONAL) == PoincarePolynomial({0: 1, 3: 1})


def test_empty_complex_is_a_discrete_cube(empty_on_two):
    assert oracle_poincare(empty_on_two, CellModel.INTERVAL, FieldTag.GF2) == PoincarePolynomial({0: 4})


def test_differentials_square_to_zero_with_signs():
    """Rational chains of the disk model on a 3-dimensional complex keep their Koszul signs."""
    K = boundary_of_simplex(4)
    C = build_complex(K, CellModel.DISK2, FieldTag.RATIONAL)
    for lower, upper in zip(C.diffs, C.diffs[1:]):
        assert lower.compose(upper).is_zero()
    assert homology_dims(C) == [1, 0, 0, 0, 0, 0, 0, 1]


def test_model_parse():
    assert CellModel.parse("Interval") is CellModel.INTERVAL
    with pytest.raises(InputError):
        CellModel.parse("sphere")


def test_oracle_size_limit():
    with pytest.raises(SizeError):
        build_complex(point_complex(8), CellModel.INTERVAL, FieldTag.GF2)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("field", FIELDS)
def test_cross_validation_exhaustive(m, field):
    for K in enumerate_complexes(m):
        report = cross_validate(K, field)
        assert report.holds, report.to_dict()


def test_cross_validation_random(rng):
    """50 random complexes, alternating between [5] and [6]."""
    for n in range(50):
        K = random_complex(5 + n % 2, rng)
        for field in FIELDS:
            assert cross_validate(K, field).holds


def test_rp2_cells_depend_on_field(rp2):
    """Torsion in the interval model shows up over GF(2) only."""
    gf2 = cross_validate(rp2, FieldTag.GF2)
    rational = cross_validate(rp2, FieldTag.RATIONAL)
    assert gf2.holds and rational.holds
    assert gf2.comparison(CellModel.INTERVAL).oracle.total_dim() == 34
    assert rational.comparison("interval").oracle.total_dim() == 32


def test_report_serialization(triangle_boundary):
    data = cross_validate(triangle_boundary, FieldTag.GF2).to_dict()
    assert data["holds"] is True
    assert [c["model"] for c in data["comparisons"]] == ["disk2", "interval"]
    assert data["comparisons"][0]["oracle"]["polynomial"] == "1 + t^5"
