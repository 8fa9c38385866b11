"""Shared fixtures; puts src/ on the import path."""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from face_ring.simplicial.complex import (  # noqa: E402
    boundary_of_simplex,
    from_maximal_faces,
    full_simplex,
    point_complex,
    rp2_six_vertex,
)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def triangle_boundary():
    """∂Δ² on [3]."""
    return boundary_of_simplex(3)


@pytest.fixture
def path_complex():
    """Edges {1,2}, {2,3} on [3]."""
    return from_maximal_faces(3, [[1, 2], [2, 3]])


@pytest.fixture
def rp2():
    return rp2_six_vertex()


@pytest.fixture
def simplex3():
    return full_simplex(3)


@pytest.fixture
def empty_on_two():
    return point_complex(2)


@pytest.fixture
def complex_file(tmp_path):
    """Write a complex document and return its path."""

    def write(text: str, name: str = "complex.yaml") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
