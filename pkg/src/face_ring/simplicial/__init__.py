"""Simplicial complexes - Construction, restriction, enumeration."""

from .complex import (
    SimplicialComplex,
    boundary_of_simplex,
    enumerate_complexes,
    from_maximal_faces,
    from_support,
    full_simplex,
    indicator,
    point_complex,
    random_complex,
    restriction,
    rp2_six_vertex,
)

__all__ = [
    "SimplicialComplex",
    "boundary_of_simplex",
    "enumerate_complexes",
    "from_maximal_faces",
    "from_support",
    "full_simplex",
    "indicator",
    "point_complex",
    "random_complex",
    "restriction",
    "rp2_six_vertex",
]
