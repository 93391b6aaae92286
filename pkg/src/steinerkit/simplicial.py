"""Stanley-Reisner complexes of block families, matroid check, Hochster Betti numbers.

The complex attached to a family C of n-subsets has facets ``V \\ s`` for s in C,
so a vertex set F is a face iff some block is disjoint from F. Faces are
bitmasks over ``1..v`` as in :mod:`steinerkit.designs`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable

import numpy as np

from .designs import BlockFamily, DesignParams, k_subsets, mask_of, points_of
from .linalg import DEFAULT_PRIME, rank_mod_p, sparse_rank
from .monomials import CoverIdealSpec, HilbertSeries

RATIONALS = 0
"""Pass as ``field`` to compute over the rationals instead of GF(p)."""


def _popcounts(masks: np.ndarray) -> np.ndarray:
    x = masks.astype(np.int64)
    out = np.zeros(x.shape, dtype=np.int64)
    while x.any():
        out += x & 1
        x >>= 1
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    v: int
    facets: tuple[int, ...]

    def __post_init__(self):
        fs = sorted(set(self.facets))
        for i, a in enumerate(fs):
            for b in fs[i + 1:]:
                if a & b == a or a & b == b:
                    raise ValueError(f"facet {points_of(a)} is nested in {points_of(b)}")
        object.__setattr__(self, "facets", tuple(fs))

    @classmethod
    def from_faces(cls, v: int, faces: Iterable[Iterable[int] | int]) -> "SimplicialComplex":
        """Build from any generating faces; nested ones are dropped."""
        masks = {f if isinstance(f, int) else mask_of(f) for f in faces}
        maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
        return cls(v, tuple(maximal))

    @cached_property
    def face_table(self) -> np.ndarray:
        """Boolean array over all 2**v vertex sets marking the faces."""
        size = 1 << self.v
        table = np.zeros(size, dtype=bool)
        table[list(self.facets)] = True
        idx = np.arange(size, dtype=np.int64)
        # downward closure: a set is a face if it plus one vertex is
        for i in range(self.v):
            bit = 1 << i
            low = idx[(idx & bit) == 0]
            table[low] |= table[low | bit]
        return table

    @cached_property
    def faces(self) -> np.ndarray:
        return np.flatnonzero(self.face_table).astype(np.int64)

    @cached_property
    def face_sizes(self) -> np.ndarray:
        return _popcounts(self.faces)

    @property
    def dimension(self) -> int:
        return int(self.face_sizes.max()) - 1 if len(self.faces) else -2


def delta_of_family(C: BlockFamily) -> SimplicialComplex:
    if len(C) == 0:
        raise ValueError("empty family")
    full = (1 << C.v) - 1
    return SimplicialComplex.from_faces(C.v, [full ^ b for b in C])


def is_face(K: SimplicialComplex, F: Iterable[int] | int) -> bool:
    m = F if isinstance(F, int) else mask_of(F)
    return any(m & f == m for f in K.facets)


@dataclass(frozen=True)
class MatroidCheck:
    ok: bool
    larger: tuple[int, ...] | None = None
    smaller: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_matroid(K: SimplicialComplex) -> MatroidCheck:
    """Exchange axiom over every pair of faces F, G with |F| > |G|.

    On failure returns one pair for which no vertex of F \\ G extends G.
    """
    table = K.face_table
    faces = K.faces
    sizes = K.face_sizes
    for g, gs in zip(faces.tolist(), sizes.tolist()):
        extend = 0
        for i in range(K.v):
            bit = 1 << i
            if not g & bit and table[g | bit]:
                extend |= bit
        bigger = faces[sizes > gs]
        bad = np.flatnonzero((bigger & ~g & extend) == 0)
        if bad.size:
            return MatroidCheck(False, points_of(int(bigger[bad[0]])), points_of(g))
    return MatroidCheck(True)


def small_faces_check(K: SimplicialComplex, params: DesignParams) -> bool:
    """Every (v - n - 1)-subset of the vertices is a face."""
    size = params.v - params.n - 1
    if size <= 0:
        return True
    table = K.face_table
    return all(table[m] for m in k_subsets(K.v, size))


@dataclass(frozen=True)
class FVector:
    """Face counts f_{-1}, f_0, ..., f_dim (entry 0 is the empty face)."""

    counts: tuple[int, ...]

    def __getitem__(self, dim: int) -> int:
        return self.counts[dim + 1]

    @property
    def dim(self) -> int:
        return len(self.counts) - 2


def f_vector(K: SimplicialComplex) -> FVector:
    if not len(K.faces):
        return FVector(())
    counts = np.bincount(K.face_sizes)
    return FVector(tuple(int(c) for c in counts))


@dataclass(frozen=True)
class HVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1 or self.entries[-1] == 0:
            raise ValueError(f"not a normalized h-vector: {self.entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    @property
    def degree(self) -> int:
        return sum(self.entries)

    @property
    def last_degree(self) -> int:
        return len(self.entries) - 1

    def is_unimodal(self) -> bool:
        e = self.entries
        i = 0
        while i + 1 < len(e) and e[i + 1] >= e[i]:
            i += 1
        return all(e[j + 1] <= e[j] for j in range(i, len(e) - 1))


class CohenMacaulayViolation(RuntimeError):
    """Finite differences of the Hilbert function did not settle to a finite h-vector."""


def finite_difference(seq: list[int], times: int) -> list[int]:
    out = list(seq)
    for _ in range(times):
        out = [out[0]] + [out[i] - out[i - 1] for i in range(1, len(out))]
    return out


def h_vector_oracle(
    C: BlockFamily, k: int = 1, degree_cap: int | None = None, progress=None
) -> HVector:
    """h-vector of the quotient by the k-th symbolic power of the cover ideal of C.

    Taken as the (v - n)-th difference of the enumerated Hilbert function. The
    quotient is Cohen-Macaulay of dimension v - n for Steiner complements, which
    makes the result finite; a negative entry or a non-zero entry at the cap
    raises :class:`CohenMacaulayViolation`.
    """
    J = CoverIdealSpec(C)
    cap = k * C.v if degree_cap is None else degree_cap
    series = HilbertSeries(J, k, progress=progress)
    h = finite_difference(series.values(cap), C.v - C.n)
    if h[cap] != 0:
        raise CohenMacaulayViolation(f"h-vector still non-zero at degree cap {cap}")
    if any(x < 0 for x in h):
        raise CohenMacaulayViolation(f"negative h-vector entry: {h}")
    while h and h[-1] == 0:
        h.pop()
    return HVector(tuple(h))


# Homology -------------------------------------------------------------------

def _boundary_rank(upper: np.ndarray, lower: np.ndarray, field: int) -> int:
    """Rank of the boundary map from faces ``upper`` (size q+1) to ``lower`` (size q)."""
    if not len(upper) or not len(lower):
        return 0
    col = {int(m): i for i, m in enumerate(lower.tolist())}
    rows: list[dict[int, int]] = []
    for f in upper.tolist():
        row = {}
        sign = 1
        rest = f
        while rest:
            bit = rest & -rest
            row[col[f ^ bit]] = sign
            sign = -sign
            rest ^= bit
        rows.append(row)
    if field == RATIONALS:
        return sparse_rank(rows)
    dense = np.zeros((len(rows), len(lower)), dtype=np.int64)
    for r, row in enumerate(rows):
        for c, val in row.items():
            dense[r, c] = val
    return rank_mod_p(dense, field)


def _reduced_homology(faces: np.ndarray, sizes: np.ndarray, n_vertices: int, field: int) -> dict[int, int]:
    """All non-zero reduced Betti numbers of the complex with the given face list.

    Ranks of boundary maps between complete skeleta are the simplex values
    C(m - 1, q) and are not recomputed.
    """
    if not len(faces):
        return {}
    top = int(sizes.max())
    by_size = [faces[sizes == s] for s in range(top + 2)]
    m = n_vertices
    ranks = [0] * (top + 2)  # ranks[s]: map from size-s faces to size-(s-1) faces
    for s in range(1, top + 1):
        if len(by_size[s]) == comb(m, s):
            ranks[s] = comb(m - 1, s - 1)
        else:
            ranks[s] = _boundary_rank(by_size[s], by_size[s - 1], field)
    out = {}
    for s in range(0, top + 1):
        b = len(by_size[s]) - ranks[s] - ranks[s + 1]
        if b:
            out[s - 1] = b
    return out


def reduced_homology_rank(K: SimplicialComplex, dim: int, field: int = DEFAULT_PRIME) -> int:
    """Rank of reduced homology of K in dimension ``dim`` over GF(field), or Q if field is 0."""
    if dim < -1:
        raise ValueError("dimension must be at least -1")
    verts = 0
    for f in K.facets:
        verts |= f
    return _reduced_homology(K.faces, K.face_sizes, bin(verts).count("1"), field).get(dim, 0)


@dataclass
class BettiTable:
    """Graded Betti numbers beta[i, j] (homological index i, internal degree j); zeros omitted."""

    values: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.values.get(key, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {k: v for k, v in sorted(self.values.items()) if v}

    def alternating_sums(self) -> dict[int, int]:
        """sum_i (-1)^i beta[i, j], keyed by j."""
        out: dict[int, int] = {}
        for (i, j), b in self.values.items():
            out[j] = out.get(j, 0) + (-1) ** i * b
        return {j: s for j, s in sorted(out.items()) if s}

    def to_rows(self) -> list[dict]:
        return [{"i": i, "j": j, "beta": b} for (i, j), b in self.nonzero().items()]


def hochster_betti(C: BlockFamily | SimplicialComplex, field: int = DEFAULT_PRIME) -> BettiTable:
    """Betti table of the Stanley-Reisner ideal via Hochster's formula.

    beta[i, j] is the sum over j-subsets W of the rank of reduced homology of
    the induced subcomplex on W in dimension j - i - 2.
    """
    K = C if isinstance(C, SimplicialComplex) else delta_of_family(C)
    table = K.face_table
    faces, sizes = K.faces, K.face_sizes
    betti: dict[tuple[int, int], int] = {}
    for W in range(1, 1 << K.v):
        if table[W]:
            continue  # induced subcomplex is a simplex
        inside = (faces & ~W) == 0
        j = bin(W).count("1")
        for dim, b in _reduced_homology(faces[inside], sizes[inside], j, field).items():
            i = j - dim - 2
            if i >= 0:
                betti[(i, j)] = betti.get((i, j), 0) + b
    return BettiTable(betti)
