"""Hyperplane arrangements in projective n-space and the point configurations they cut out.

Each block ``s`` of a family picks the n hyperplanes indexed by its points;
their common point is ``P_s``. All coordinates are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .designs import BlockFamily, points_of
from .linalg import det, kernel_vector, primitive, rank


class GeneralPositionError(ValueError):
    """The arrangement has a dependent set of forms or two coinciding points."""


@dataclass(frozen=True)
class LinearForm:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", primitive(self.coefficients))

    def __call__(self, point: "ProjectivePoint | Sequence[int]") -> int:
        coords = point.coordinates if isinstance(point, ProjectivePoint) else point
        return sum(a * b for a, b in zip(self.coefficients, coords))


@dataclass(frozen=True)
class ProjectivePoint:
    coordinates: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coordinates", primitive(self.coordinates))

    def __iter__(self):
        return iter(self.coordinates)


def canonical(p: ProjectivePoint | Sequence[int | Fraction]) -> ProjectivePoint:
    return ProjectivePoint(tuple(p))


@dataclass(frozen=True)
class Arrangement:
    n: int
    forms: tuple[LinearForm, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient dimension must be positive")
        object.__setattr__(self, "forms", tuple(self.forms))
        for f in self.forms:
            if len(f.coefficients) != self.n + 1:
                raise ValueError(f"form {f.coefficients} does not live in P^{self.n}")

    @property
    def v(self) -> int:
        return len(self.forms)

    def matrix(self, indices: Iterable[int]) -> list[tuple[int, ...]]:
        """Coefficient rows of the forms at the given 1-based indices."""
        return [self.forms[i - 1].coefficients for i in indices]


def default_nodes(v: int) -> list[int]:
    return [i * i for i in range(1, v + 1)]


def vandermonde_arrangement(
    v: int, n: int, nodes: Sequence[int | Fraction] | None = None
) -> Arrangement:
    """Forms ``sum_k a**k x_k`` for distinct nodes a.

    Distinct nodes give general position, but equally spaced ones also put
    every block with the same node sum on one extra hyperplane. The default
    nodes are the squares 1, 4, ..., v**2, which avoid that.
    """
    nodes = default_nodes(v) if nodes is None else [Fraction(a) for a in nodes]
    if len(nodes) != v:
        raise ValueError(f"expected {v} nodes, got {len(nodes)}")
    if len(set(nodes)) != v:
        raise GeneralPositionError("nodes must be pairwise distinct")
    if v < n + 1:
        raise ValueError(f"need at least n + 1 = {n + 1} hyperplanes, got {v}")
    forms = tuple(LinearForm(tuple(Fraction(a) ** k for k in range(n + 1))) for a in nodes)
    return Arrangement(n, forms)


def power_arrangement(bases: Sequence[int], v: int) -> Arrangement:
    """Forms ``sum_k bases[k]**i x_k`` for i = 1..v."""
    forms = tuple(LinearForm(tuple(b**i for b in bases)) for i in range(1, v + 1))
    return Arrangement(len(bases) - 1, forms)


def general_position_check(A: Arrangement) -> bool:
    """Every min(n + 1, v) of the forms are linearly independent."""
    size = min(A.n + 1, A.v)
    for idx in combinations(range(1, A.v + 1), size):
        rows = A.matrix(idx)
        if size == A.n + 1:
            if det(rows) == 0:
                return False
        elif rank(rows) < size:
            return False
    return True


def intersection_point(A: Arrangement, sigma: Iterable[int] | int) -> ProjectivePoint:
    """The point common to the n hyperplanes indexed by ``sigma`` (1-based)."""
    idx = points_of(sigma) if isinstance(sigma, int) else tuple(sorted(sigma))
    if len(idx) != A.n:
        raise ValueError(f"need {A.n} hyperplanes, got {len(idx)}")
    try:
        return ProjectivePoint(kernel_vector(A.matrix(idx)))
    except ValueError as exc:
        raise GeneralPositionError(f"hyperplanes {idx} do not meet in a single point") from exc


def configuration_points(A: Arrangement, family: BlockFamily) -> list[ProjectivePoint]:
    """One point per block, in block order."""
    if family.n != A.n:
        raise ValueError(f"blocks have size {family.n}, arrangement lives in P^{A.n}")
    if family.v > A.v:
        raise ValueError(f"family uses {family.v} points, arrangement has {A.v} forms")
    pts = [intersection_point(A, b) for b in family]
    if len(set(pts)) != len(pts):
        raise GeneralPositionError("two blocks give the same point")
    return pts


def star_configuration(A: Arrangement) -> list[ProjectivePoint]:
    return configuration_points(A, BlockFamily.all_subsets(A.n, A.v))


def incidences(A: Arrangement, point: ProjectivePoint) -> tuple[int, ...]:
    """1-based indices of the hyperplanes through the point."""
    return tuple(i for i, f in enumerate(A.forms, 1) if f(point) == 0)
