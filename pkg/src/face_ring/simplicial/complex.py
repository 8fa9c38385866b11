"""Abstract simplicial complexes on [m] and their indicator functions."""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..error_handling.errors import InputError, SizeError
from ..powerset.functions import SubsetFn, maximal_masks, require_nice
from ..powerset.subset import (
    MAX_GROUND_SET,
    Subset,
    canonical_order,
    elements_mask,
    mask_elements,
    popcount,
    submasks,
)


logger = logging.getLogger(__name__)

Generator = Union[Subset, Iterable[int]]


def _closure(maximal: Iterable[int]) -> FrozenSet[int]:
    faces = {0}
    for top in maximal:
        faces.update(submasks(top))
    return frozenset(faces)


@dataclass(frozen=True)
class SimplicialComplex:
    """
    A downward-closed family of subsets of [m] containing ∅.

    Faces are bit masks over internal positions 0..m-1; ``labels[p]`` is the
    vertex name reported for position p (1..m unless the complex is a
    restriction of another one).

    Attributes:
        m: Ground-set size (0 only for restrictions to ∅)
        maximal_faces: Inclusion-maximal faces, canonical order
        labels: Reported vertex names
        faces: Every face, derived from ``maximal_faces``
    """

    m: int
    maximal_faces: Tuple[int, ...]
    labels: Tuple[int, ...]
    faces: FrozenSet[int] = field(init=False, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        if self.m < 0 or self.m > MAX_GROUND_SET:
            raise SizeError(f"ground-set size must lie in [0, {MAX_GROUND_SET}], got {self.m}")
        if len(self.labels) != self.m:
            raise InputError(f"expected {self.m} labels, got {len(self.labels)}")
        object.__setattr__(self, "faces", _closure(self.maximal_faces))

    # Construction

    @classmethod
    def from_masks(
        cls, m: int, masks: Iterable[int], labels: Optional[Sequence[int]] = None
    ) -> "SimplicialComplex":
        """Downward closure of the given face masks (∅ always included)."""
        top = maximal_masks(list(masks) + [0])
        return cls(m, tuple(top), tuple(labels) if labels is not None else tuple(range(1, m + 1)))

    # Basic invariants

    @property
    def dim(self) -> int:
        return max(popcount(mask) for mask in self.maximal_faces) - 1

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for top in self.maximal_faces:
            mask |= top
        return mask

    @property
    def ground_mask(self) -> int:
        return (1 << self.m) - 1

    def vertices(self) -> Tuple[int, ...]:
        """Labels of the vertices that occur in some face."""
        return self.to_labels(self.vertex_mask)

    def ghost_vertices(self) -> Tuple[int, ...]:
        """Labels of ground-set elements lying in no face."""
        return self.to_labels(self.ground_mask & ~self.vertex_mask)

    def has_ghost_vertices(self) -> bool:
        return self.vertex_mask != self.ground_mask

    def f_vector(self) -> List[int]:
        """Number of faces of each size 0, 1, ..., dim + 1 (the entry for ∅ is 1)."""
        counts = [0] * (self.dim + 2)
        for face in self.faces:
            counts[popcount(face)] += 1
        return counts

    def reduced_euler_characteristic(self) -> int:
        return sum(count if size % 2 else -count for size, count in enumerate(self.f_vector()))

    def faces_by_size(self) -> Dict[int, List[int]]:
        grouped: Dict[int, List[int]] = {}
        for face in canonical_order(self.faces):
            grouped.setdefault(popcount(face), []).append(face)
        return grouped

    def face_subsets(self) -> List[Subset]:
        return [Subset(mask, self.m) for mask in canonical_order(self.faces)]

    def maximal_subsets(self) -> List[Subset]:
        return [Subset(mask, self.m) for mask in self.maximal_faces]

    def contains(self, face: Union[Subset, int]) -> bool:
        mask = face.mask if isinstance(face, Subset) else face
        return mask in self.faces

    # Labels

    def to_labels(self, mask: int) -> Tuple[int, ...]:
        return tuple(self.labels[e - 1] for e in mask_elements(mask))

    def from_labels(self, names: Iterable[int]) -> int:
        position = {name: p for p, name in enumerate(self.labels)}
        mask = 0
        for name in names:
            if name not in position:
                raise InputError(f"vertex {name} is not in the ground set {self.labels}")
            mask |= 1 << position[name]
        return mask

    def labelled_faces(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(frozenset(self.to_labels(face)) for face in self.faces)

    # Derived complexes

    def restriction(self, a: Union[Subset, int]) -> "SimplicialComplex":
        """The full subcomplex K|_a on ground set a, re-indexed, labels kept."""
        mask = a.mask if isinstance(a, Subset) else a
        if mask & ~self.ground_mask:
            raise InputError(f"subset mask {mask} is not contained in [{self.m}]")
        positions = [p for p in range(self.m) if mask >> p & 1]

        def compress(face: int) -> int:
            out = 0
            for new, old in enumerate(positions):
                if face >> old & 1:
                    out |= 1 << new
            return out

        restricted = {compress(top & mask) for top in self.maximal_faces}
        return SimplicialComplex.from_masks(
            len(positions), restricted, labels=[self.labels[p] for p in positions]
        )

    def star(self, face: Union[Subset, int]) -> "SimplicialComplex":
        """Closed star {b : b ∪ face ∈ K}; empty face gives K itself."""
        mask = face.mask if isinstance(face, Subset) else face
        if mask not in self.faces:
            raise InputError(f"{self.to_labels(mask)} is not a face")
        tops = [top for top in self.maximal_faces if top & mask == mask]
        return SimplicialComplex.from_masks(self.m, tops, labels=self.labels)

    def cone_points(self) -> int:
        """Mask of vertices contained in every maximal face."""
        common = self.ground_mask
        for top in self.maximal_faces:
            common &= top
        return common

    def relabel(self, permutation: Sequence[int]) -> "SimplicialComplex":
        """Move position p, and its label, to position ``permutation[p]`` (0-based)."""
        if sorted(permutation) != list(range(self.m)):
            raise InputError(f"{permutation!r} is not a permutation of range({self.m})")

        def move(face: int) -> int:
            out = 0
            for p in range(self.m):
                if face >> p & 1:
                    out |= 1 << permutation[p]
            return out

        labels = [0] * self.m
        for p, target in enumerate(permutation):
            labels[target] = self.labels[p]
        return SimplicialComplex.from_masks(self.m, [move(top) for top in self.maximal_faces], labels=labels)

    def __str__(self) -> str:
        tops = ", ".join("{" + ",".join(map(str, self.to_labels(t))) + "}" for t in self.maximal_faces)
        return f"K(m={self.m}; {tops})"


def from_maximal_faces(
    m: int, gens: Iterable[Generator], labels: Optional[Sequence[int]] = None
) -> SimplicialComplex:
    """
    Downward closure of the generators together with ∅.

    Args:
        m: Ground-set size, 1..25
        gens: Subsets, or iterables of 1-based elements
        labels: Optional vertex names (defaults to 1..m)

    Raises:
        InputError: If a generator has an element outside [m]
    """
    if not isinstance(m, int) or m < 1 or m > MAX_GROUND_SET:
        raise SizeError(f"ground-set size must lie in [1, {MAX_GROUND_SET}], got {m!r}")
    masks = []
    for pos, gen in enumerate(gens):
        if isinstance(gen, Subset):
            if gen.m != m:
                raise InputError(f"generator {gen} lives on [{gen.m}]", position=f"[{pos}]")
            masks.append(gen.mask)
        else:
            try:
                masks.append(elements_mask(m, gen))
            except InputError as e:
                raise InputError(f"bad generator: {e}", position=f"[{pos}]") from e
    complex_ = SimplicialComplex.from_masks(m, masks, labels=labels)
    logger.debug(f"Built {complex_} from {len(masks)} generators")
    return complex_


def indicator(K: SimplicialComplex) -> SubsetFn:
    """The nice function whose support is the face set of K."""
    table = np.zeros(1 << K.m, dtype=np.uint8)
    table[np.fromiter(K.faces, dtype=np.int64)] = 1
    return SubsetFn(K.m, table)


def from_support(f: SubsetFn) -> SimplicialComplex:
    """
    The complex K_f = supp(f).

    Raises:
        NicenessError: If supp(f) is not downward closed
    """
    require_nice(f)
    return SimplicialComplex.from_masks(f.m, maximal_masks(f.support_masks()))


def restriction(K: SimplicialComplex, a: Union[Subset, int]) -> SimplicialComplex:
    return K.restriction(a)


def enumerate_complexes(m: int) -> Iterator[SimplicialComplex]:
    """
    Every simplicial complex on [m] exactly once (void complex excluded).

    Faces are decided in canonical order, so a subset is offered only after
    all of its facets have been decided.

    Raises:
        SizeError: If m > 4
    """
    if not isinstance(m, int) or m < 1 or m > 4:
        raise SizeError(f"exhaustive enumeration supports 1 <= m <= 4, got {m!r}")
    order = canonical_order(range(1, 1 << m))
    chosen = {0}

    def extend(pos: int) -> Iterator[SimplicialComplex]:
        if pos == len(order):
            yield SimplicialComplex.from_masks(m, chosen)
            return
        mask = order[pos]
        yield from extend(pos + 1)
        if all(mask ^ (1 << (e - 1)) in chosen for e in mask_elements(mask)):
            chosen.add(mask)
            yield from extend(pos + 1)
            chosen.discard(mask)

    yield from extend(0)


def random_complex(
    m: int, rng: np.random.Generator, max_generators: Optional[int] = None
) -> SimplicialComplex:
    """
    A random complex: the closure of a few random subsets of [m].

    Generator sizes are drawn uniformly so that low- and high-dimensional
    complexes both occur.
    """
    if max_generators is None:
        max_generators = m + 2
    count = int(rng.integers(0, max_generators + 1))
    masks = []
    for _ in range(count):
        size = int(rng.integers(1, m + 1))
        chosen = rng.choice(m, size=size, replace=False)
        masks.append(int(sum(1 << int(p) for p in chosen)))
    return SimplicialComplex.from_masks(m, masks)


def full_simplex(m: int) -> SimplicialComplex:
    """The full power set 2^[m]."""
    return from_maximal_faces(m, [range(1, m + 1)])


def boundary_of_simplex(m: int) -> SimplicialComplex:
    """All proper subsets of [m]."""
    return from_maximal_faces(m, [[e for e in range(1, m + 1) if e != skip] for skip in range(1, m + 1)])


def point_complex(m: int) -> SimplicialComplex:
    """The complex {∅} on [m]."""
    return from_maximal_faces(m, [])


def rp2_six_vertex() -> SimplicialComplex:
    """Minimal 6-vertex triangulation of the real projective plane (10 triangles)."""
    return from_maximal_faces(
        6,
        [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
        ],
    )
