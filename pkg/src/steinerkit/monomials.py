"""Brute-force ground truth for cover ideals and their symbolic powers.

The cover ideal of a family of n-subsets is the intersection of the primes
generated by the variables of each subset. A monomial ``x^a`` lies in the k-th
symbolic power iff every subset's restricted degree ``sum(a[i] for i in s)`` is
at least k. Everything here is decided by enumerating exponent vectors;
nothing is taken from closed formulas.

Monomials are plain tuples of exponents (index 0 is the variable for point 1).
Exponent enumeration is colexicographic within each degree: the last
coordinate is the primary key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .designs import BlockFamily, points_of

Monomial = tuple[int, ...]

_CHUNK = 1 << 17
_BLOCK_SLICE = 32


class DegreeCapExceeded(RuntimeError):
    """An enumeration reached its degree cap without an answer."""


@dataclass(frozen=True)
class CoverIdealSpec:
    family: BlockFamily
    _incidence: np.ndarray = field(init=False, repr=False, compare=False)
    _incidence_f: np.ndarray = field(init=False, repr=False, compare=False)
    _supports: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.family) == 0:
            raise ValueError("cover ideal of an empty family is the unit ideal")
        supports = tuple(tuple(p - 1 for p in points_of(b)) for b in self.family)
        inc = np.zeros((self.family.v, len(supports)), dtype=np.int64)
        for j, s in enumerate(supports):
            inc[list(s), j] = 1
        object.__setattr__(self, "_incidence", inc)
        object.__setattr__(self, "_incidence_f", inc.astype(np.float64))
        object.__setattr__(self, "_supports", supports)

    @property
    def v(self) -> int:
        return self.family.v

    def block_degrees(self, exps: np.ndarray) -> np.ndarray:
        """Restricted degrees, one column per block, for a 2-d batch of exponent rows."""
        return exps @ self._incidence

    def members(self, exps: np.ndarray, k: int) -> np.ndarray:
        """Boolean mask of the rows lying in the k-th symbolic power."""
        alive = np.ones(len(exps), dtype=bool)
        if k <= 0 or not len(exps):
            return alive
        # float64 products are exact here (entries far below 2**53) and hit BLAS;
        # blocks are tested in slices so rows that already failed drop out
        inc = self._incidence_f
        idx = np.arange(len(exps))
        rows = exps.astype(np.float64)
        for start in range(0, inc.shape[1], _BLOCK_SLICE):
            deg = rows @ inc[:, start:start + _BLOCK_SLICE]
            ok = (deg >= k).all(axis=1)
            idx, rows = idx[ok], rows[ok]
            if not len(idx):
                break
        alive[:] = False
        alive[idx] = True
        return alive


def squarefree(v: int, points: Sequence[int]) -> Monomial:
    """The 0/1 monomial on the given 1-indexed points."""
    a = [0] * v
    for p in points:
        a[p - 1] = 1
    return tuple(a)


def in_symbolic_power(m: Sequence[int], J: CoverIdealSpec, k: int) -> bool:
    if len(m) != J.v:
        raise ValueError(f"monomial has {len(m)} exponents, ring has {J.v} variables")
    if k <= 0:
        return True
    return all(sum(m[i] for i in s) >= k for s in J._supports)


# Composition enumeration ----------------------------------------------------

@lru_cache(maxsize=None)
def _count(d: int, parts: int, cap: int) -> int:
    if parts == 0:
        return 1 if d == 0 else 0
    return sum(_count(d - c, parts - 1, cap) for c in range(min(d, cap) + 1))


def count_compositions(d: int, parts: int, cap: int | None = None) -> int:
    """Number of exponent vectors of degree d with ``parts`` entries, each at most ``cap``."""
    if cap is None or cap >= d:
        return comb(d + parts - 1, parts - 1) if parts else int(d == 0)
    return _count(d, parts, cap)


@lru_cache(maxsize=2048)
def _block(d: int, parts: int, cap: int) -> np.ndarray:
    # memoized and read-only; small dtype keeps the cache compact
    dtype = np.int8 if cap < 128 else np.int64
    if parts == 0:
        out = np.zeros((1 if d == 0 else 0, 0), dtype=dtype)
    elif parts == 1:
        out = np.full((1 if d <= cap else 0, 1), d, dtype=dtype)
    else:
        pieces = []
        for c in range(min(d, cap) + 1):
            sub = _block(d - c, parts - 1, cap)
            if len(sub):
                piece = np.empty((len(sub), parts), dtype=dtype)
                piece[:, :-1] = sub
                piece[:, -1] = c
                pieces.append(piece)
        out = np.concatenate(pieces) if pieces else np.zeros((0, parts), dtype=dtype)
    out.flags.writeable = False
    return out


def iter_compositions(
    d: int, parts: int, cap: int | None = None, chunk: int = _CHUNK
) -> Iterator[np.ndarray]:
    """Yield all exponent vectors of degree d in colex order, in bounded-size batches."""
    cap = d if cap is None else min(cap, d)

    def rec(dd: int, p: int) -> Iterator[np.ndarray]:
        if count_compositions(dd, p, cap) <= chunk or p <= 1:
            blk = _block(dd, p, cap)
            if len(blk):
                yield blk.astype(np.int64)
            return
        for c in range(min(dd, cap) + 1):
            for sub in rec(dd - c, p - 1):
                out = np.empty((len(sub), p), dtype=np.int64)
                out[:, :-1] = sub
                out[:, -1] = c
                yield out

    yield from rec(d, parts)


# Oracles --------------------------------------------------------------------

def _default_cap(J: CoverIdealSpec, k: int) -> int:
    # (x_1...x_v)^ceil(k/n) is always a member
    n = J.family.n
    return J.v * (-(-k // n))


def alpha_witness(
    J: CoverIdealSpec, k: int, degree_cap: int | None = None
) -> tuple[int, Monomial]:
    """Least degree of a monomial in the k-th symbolic power, with the colex-first witness.

    A minimal-degree member never has an exponent above k (lowering it keeps
    membership), so each degree is scanned with entries capped at k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    cap = _default_cap(J, k) if degree_cap is None else degree_cap
    for d in range(cap + 1):
        for batch in iter_compositions(d, J.v, cap=k):
            hit = np.flatnonzero(J.members(batch, k))
            if hit.size:
                return d, tuple(int(x) for x in batch[hit[0]])
    raise DegreeCapExceeded(f"no member of the {k}-th symbolic power up to degree {cap}")


def alpha_symbolic(J: CoverIdealSpec, k: int, degree_cap: int | None = None) -> int:
    return alpha_witness(J, k, degree_cap)[0]


def hilbert_function(J: CoverIdealSpec, k: int, d: int) -> int:
    """Number of degree-d monomials outside the k-th symbolic power."""
    total = 0
    for batch in iter_compositions(d, J.v):
        total += int(np.count_nonzero(~J.members(batch, k)))
    return total


class HilbertSeries:
    """Exact Hilbert function of the quotient by a symbolic power, via truncation classes.

    Membership of ``a`` only depends on ``b = min(a, k)`` coordinatewise. Every
    class ``b`` is enumerated once; a class with coordinate sum ``s`` and ``f``
    entries equal to k accounts for ``C(d - s + f - 1, f - 1)`` monomials of
    degree d. Summing over the non-member classes gives the Hilbert function in
    every degree.
    """

    def __init__(self, J: CoverIdealSpec, k: int, chunk: int = 1 << 16, progress=None):
        v = J.v
        self.k = k
        self.v = v
        base = k + 1
        total = base**v
        table = np.zeros((k * v + 1) * (v + 1), dtype=np.int64)
        powers = base ** np.arange(v, dtype=np.int64)
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            b = (idx[:, None] // powers[None, :]) % base
            keep = ~J.members(b, k)
            if not keep.any():
                continue
            b = b[keep]
            s = b.sum(axis=1)
            f = (b == k).sum(axis=1)
            table += np.bincount(s * (v + 1) + f, minlength=table.size)
            if progress is not None:
                progress(start + len(idx), total)
        grid = table.reshape(k * v + 1, v + 1)
        self.classes: list[tuple[int, int, int]] = [
            (int(s), int(f), int(grid[s, f])) for s, f in zip(*np.nonzero(grid))
        ]

    def __call__(self, d: int) -> int:
        total = 0
        for s, f, count in self.classes:
            e = d - s
            if e < 0:
                continue
            if f == 0:
                total += count if e == 0 else 0
            else:
                total += count * comb(e + f - 1, f - 1)
        return total

    def values(self, upto: int) -> list[int]:
        return [self(d) for d in range(upto + 1)]


def minimal_generators(J: CoverIdealSpec) -> tuple[Monomial, ...]:
    """Squarefree minimal generators: minimal vertex sets meeting every block."""
    v = J.v
    masks = np.arange(1 << v, dtype=np.int64)
    covers = np.ones(masks.size, dtype=bool)
    for b in J.family:
        covers &= (masks & b) != 0
    minimal = covers.copy()
    for i in range(v):
        bit = 1 << i
        has = (masks & bit) != 0
        minimal[has] &= ~covers[masks[has] ^ bit]
    gens = [squarefree(v, points_of(int(m))) for m in masks[minimal]]
    gens.sort(key=lambda g: (sum(g), g))
    return tuple(gens)


def _divides(g: Sequence[int], m: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(g, m))


def in_ordinary_power(m: Sequence[int], gens: Sequence[Monomial], d: int) -> bool:
    """Whether m is divisible by a product of d generators (repetition allowed)."""
    if d > 4:
        raise ValueError("ordinary-power membership is limited to d <= 4")
    if d <= 0:
        return True
    gens = tuple(tuple(g) for g in gens)
    min_deg = min(sum(g) for g in gens)

    @lru_cache(maxsize=None)
    def rec(rest: Monomial, depth: int, start: int) -> bool:
        if depth == 0:
            return True
        if sum(rest) < depth * min_deg:
            return False
        # generators are taken in nondecreasing index order; products commute
        for gi in range(start, len(gens)):
            g = gens[gi]
            if _divides(g, rest):
                if rec(tuple(a - b for a, b in zip(rest, g)), depth - 1, gi):
                    return True
        return False

    return rec(tuple(m), d, 0)


def containment_witness(
    J: CoverIdealSpec, k: int, d: int, degree_cap: int | None = None
) -> Monomial | None:
    """A monomial in the k-th symbolic power but not in the d-th ordinary power.

    First tries the cheap degree argument (a member of degree below ``d`` times
    the initial degree of J). Otherwise scans members degree by degree up to
    ``degree_cap`` and returns ``None`` if nothing turns up.
    """
    alpha_one = alpha_symbolic(J, 1)
    alpha_k, wit = alpha_witness(J, k)
    if alpha_k < d * alpha_one:
        return wit
    cap = alpha_k + J.v if degree_cap is None else degree_cap
    if cap < alpha_k:
        raise DegreeCapExceeded(f"degree cap {cap} is below the initial degree {alpha_k}")
    gens = minimal_generators(J)
    gen_arr = np.array(gens, dtype=np.int64)
    for deg in range(alpha_k, cap + 1):
        for batch in iter_compositions(deg, J.v):
            cand = batch[J.members(batch, k)]
            if not len(cand):
                continue
            if d == 1:
                divisible = (cand[:, None, :] >= gen_arr[None, :, :]).all(axis=2).any(axis=1)
                hit = np.flatnonzero(~divisible)
                if hit.size:
                    return tuple(int(x) for x in cand[hit[0]])
                continue
            for row in cand:
                mono = tuple(int(x) for x in row)
                if not in_ordinary_power(mono, gens, d):
                    return mono
    return None
