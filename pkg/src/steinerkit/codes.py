"""Linear codes from projective point configurations.

The generating matrix has one column per point. Over the rationals, the
minimum distance is the number of points minus the largest number of them on
one hyperplane, so everything reduces to exact incidence counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .geometry import LinearForm, ProjectivePoint, canonical
from .linalg import kernel_vector, primitive, rank as _rank


@dataclass(frozen=True)
class GeneratingMatrix:
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        if not cols:
            raise ValueError("a generating matrix needs at least one column")
        if any(len(c) != len(cols[0]) for c in cols):
            raise ValueError("columns have different lengths")
        seen = {}
        for i, c in enumerate(cols):
            if not any(c):
                raise ValueError(f"column {i} is zero")
            key = primitive(c)
            if key in seen:
                raise ValueError(f"columns {seen[key]} and {i} are proportional")
            seen[key] = i
        object.__setattr__(self, "columns", cols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.columns[0]), len(self.columns)

    @property
    def rows(self) -> list[list[int]]:
        return [list(r) for r in zip(*self.columns)]


def generating_matrix(points: Sequence[ProjectivePoint | Sequence[int]]) -> GeneratingMatrix:
    return GeneratingMatrix(tuple(tuple(p) for p in points))


def rank(A: GeneratingMatrix) -> int:
    return _rank(A.columns)


@dataclass(frozen=True)
class HypResult:
    count: int
    hyperplane: LinearForm
    on_hyperplane: tuple[int, ...]  # 0-based point indices


def hyp(points: Sequence[ProjectivePoint | Sequence[int]]) -> HypResult:
    """Most points on one hyperplane, by brute force over n-subsets.

    Each spanning n-subset determines a hyperplane through its normal vector;
    the points on a hyperplane are exactly the union of the spanning subsets
    that land on it. Ties go to the smallest normal vector.
    """
    pts = [canonical(p).coordinates for p in points]
    if not pts:
        raise ValueError("no points")
    n = len(pts[0]) - 1
    if len(pts) < n:
        raise ValueError(f"need at least {n} points in P^{n}, got {len(pts)}")
    if _rank(pts) <= n:
        # everything fits in one hyperplane; complete to n independent rows
        rows = list(pts)
        basis = []
        for r in rows:
            if _rank(basis + [r]) > len(basis):
                basis.append(r)
        for e in range(n + 1):
            if len(basis) == n:
                break
            unit = tuple(int(i == e) for i in range(n + 1))
            if _rank(basis + [unit]) > len(basis):
                basis.append(unit)
        return HypResult(len(pts), LinearForm(kernel_vector(basis)), tuple(range(len(pts))))
    planes: dict[tuple[int, ...], set[int]] = {}
    for idx in combinations(range(len(pts)), n):
        try:
            normal = kernel_vector([pts[i] for i in idx])
        except ValueError:
            continue
        planes.setdefault(normal, set()).update(idx)
    top = max(len(s) for s in planes.values())
    normal = min(k for k, s in planes.items() if len(s) == top)
    return HypResult(top, LinearForm(normal), tuple(sorted(planes[normal])))


def min_distance(points: Sequence[ProjectivePoint | Sequence[int]]) -> int:
    return len(points) - hyp(points).count


@dataclass(frozen=True)
class CodeParams:
    length: int
    dimension: int
    distance: int

    @property
    def mds(self) -> bool:
        """Singleton bound d <= length - dimension + 1 is attained."""
        return self.distance == self.length - self.dimension + 1

    def to_dict(self) -> dict:
        return {"length": self.length, "dimension": self.dimension, "distance": self.distance, "mds": self.mds}

    def __str__(self) -> str:
        return f"[{self.length},{self.dimension},{self.distance}]"


def code_params(points: Sequence[ProjectivePoint | Sequence[int]]) -> CodeParams:
    A = generating_matrix(points)
    return CodeParams(len(points), rank(A), min_distance(points))
