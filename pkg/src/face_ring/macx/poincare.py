"""Poincaré polynomials of generalized moment-angle complexes from Betti tables."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

from ..error_handling.errors import InputError
from ..hochster.betti import BettiTable, betti_table
from ..linalg.matrix import FieldTag
from ..simplicial.complex import SimplicialComplex


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeVector:
    """
    Per-vertex degree kappa_k of the sphere S_k in the pair (D_k, S_k).

    kappa = (1, ..., 1) gives the moment-angle complex, (0, ..., 0) its real version.
    """

    kappa: Tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.kappa)
        for pos, value in enumerate(values):
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise InputError(f"kappa entries must be nonnegative integers, got {value!r}", position=f"[{pos}]")
        object.__setattr__(self, "kappa", values)

    @classmethod
    def constant(cls, m: int, value: int) -> "DegreeVector":
        return cls(tuple([value] * m))

    @classmethod
    def parse(cls, text: str) -> "DegreeVector":
        """Read a comma-separated list such as ``1,1,0``."""
        parts = [p.strip() for p in str(text).split(",") if p.strip()]
        values = []
        for pos, part in enumerate(parts):
            try:
                values.append(int(part))
            except ValueError as e:
                raise InputError(f"kappa entry {part!r} is not an integer", position=f"[{pos}]") from e
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.kappa)

    def shift(self, mask: int) -> int:
        """Sum over k in a of (kappa_k + 1)."""
        return sum(value + 1 for p, value in enumerate(self.kappa) if mask >> p & 1)


@dataclass(frozen=True)
class PoincarePolynomial:
    """
    Graded dimensions ``{n: dim H^n}`` with zero coefficients dropped.
    """

    coeffs: Mapping[int, int]

    def __post_init__(self) -> None:
        clean = {int(n): int(c) for n, c in self.coeffs.items() if c}
        for n, c in clean.items():
            if n < 0 or c < 0:
                raise InputError(f"invalid term {c} t^{n}")
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_dims(cls, dims: Sequence[int], start_degree: int = 0) -> "PoincarePolynomial":
        return cls({start_degree + k: d for k, d in enumerate(dims)})

    def coefficient(self, n: int) -> int:
        return self.coeffs.get(n, 0)

    def total_dim(self) -> int:
        return sum(self.coeffs.values())

    def euler_characteristic(self) -> int:
        """Alternating sum, i.e. the polynomial evaluated at t = -1."""
        return sum((-1) ** n * c for n, c in self.coeffs.items())

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PoincarePolynomial):
            return NotImplemented
        return dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for n, c in self.coeffs.items():
            if n == 0:
                terms.append(str(c))
                continue
            power = "t" if n == 1 else f"t^{n}"
            terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "polynomial": str(self),
            "terms": [{"degree": n, "dim": c} for n, c in self.coeffs.items()],
            "total": self.total_dim(),
        }


def poincare_generalized(T: BettiTable, kappa: DegreeVector) -> PoincarePolynomial:
    """
    coeffs[n] = sum of beta_{i,a} over entries with -i + sum_{k in a}(kappa_k + 1) = n.

    Raises:
        InputError: If kappa does not have one entry per vertex
    """
    if not isinstance(kappa, DegreeVector):
        kappa = DegreeVector(tuple(kappa))
    if len(kappa) != T.m:
        raise InputError(f"kappa has {len(kappa)} entries for a ground set of size {T.m}")
    coeffs: Dict[int, int] = {}
    for (i, mask), beta in T.entries.items():
        n = kappa.shift(mask) - i
        coeffs[n] = coeffs.get(n, 0) + beta
    P = PoincarePolynomial(coeffs)
    if P.total_dim() != T.total():
        raise AssertionError(f"total dimension {P.total_dim()} differs from total Betti number {T.total()}")
    logger.debug(f"Poincaré polynomial for kappa={list(kappa.kappa)}: {P}")
    return P


def poincare_zk(
    K: SimplicialComplex, field: FieldTag, table: Optional[BettiTable] = None
) -> PoincarePolynomial:
    """Cohomology of the moment-angle complex (D^2, S^1), all kappa = 1."""
    if table is None:
        table = betti_table(K, field)
    return poincare_generalized(table, DegreeVector.constant(K.m, 1))


def poincare_rzk(
    K: SimplicialComplex, field: FieldTag, table: Optional[BettiTable] = None
) -> PoincarePolynomial:
    """Cohomology of the real moment-angle complex (D^1, S^0), all kappa = 0."""
    if table is None:
        table = betti_table(K, field)
    return poincare_generalized(table, DegreeVector.constant(K.m, 0))


def total_dim(P: PoincarePolynomial) -> int:
    return P.total_dim()


def degree_bound_holds(P: PoincarePolynomial, K: SimplicialComplex) -> bool:
    """
    For kappa = (1, ..., 1): the constant term is 1 and, unless K is the full
    simplex, no degree exceeds 2m - 1.
    """
    if P.coefficient(0) != 1:
        return False
    if K.maximal_faces == (K.ground_mask,):
        return P.coeffs == {0: 1}
    return P.degree() <= 2 * K.m - 1
