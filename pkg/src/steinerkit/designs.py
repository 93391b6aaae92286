"""Steiner systems: construction, verification, exact-cover search.

Points are ``1..v``; a block is stored as a bitmask with bit ``i - 1`` set for
point ``i``.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Iterator, Sequence


class DesignError(ValueError):
    """Invalid parameters or a block family that does not fit them."""


class SearchBudgetExceeded(RuntimeError):
    """The exact-cover search ran out of time before finishing."""


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << (p - 1)
    return m


def points_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def k_subsets(v: int, k: int) -> Iterator[int]:
    """All k-subsets of ``1..v`` as masks, in increasing mask order."""
    if k < 0 or k > v:
        return
    if k == 0:
        yield 0
        return
    # Gosper's hack enumerates same-popcount masks in increasing order
    m = (1 << k) - 1
    limit = 1 << v
    while m < limit:
        yield m
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r


@dataclass(frozen=True)
class DesignParams:
    t: int
    n: int
    v: int
    lam: int = 1

    def __post_init__(self):
        if not (2 <= self.t < self.n <= self.v):
            raise DesignError(f"need 2 <= t < n <= v, got t={self.t}, n={self.n}, v={self.v}")
        if self.lam < 1:
            raise DesignError("lambda must be positive")


@dataclass(frozen=True)
class BlockFamily:
    """Canonical family of n-subsets of ``1..v`` (sorted, duplicate-free masks)."""

    v: int
    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.v) - 1
        prev = -1
        for b in self.blocks:
            if b <= prev:
                raise DesignError("blocks must be strictly increasing masks")
            if b & ~full or popcount(b) != self.n:
                raise DesignError(f"block {points_of(b)} is not an {self.n}-subset of 1..{self.v}")
            prev = b

    @classmethod
    def from_sets(cls, v: int, n: int, sets: Iterable[Iterable[int]]) -> "BlockFamily":
        masks = set()
        for s in sets:
            s = list(s)
            if len(set(s)) != len(s) or any(not 1 <= p <= v for p in s):
                raise DesignError(f"bad block {s} for v={v}")
            m = mask_of(s)
            if m in masks:
                raise DesignError(f"duplicate block {sorted(s)}")
            masks.add(m)
        return cls(v, n, tuple(sorted(masks)))

    @classmethod
    def all_subsets(cls, n: int, v: int) -> "BlockFamily":
        return cls(v, n, tuple(k_subsets(v, n)))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.blocks)

    def __contains__(self, block) -> bool:
        m = block if isinstance(block, int) else mask_of(block)
        return m in set(self.blocks)

    def as_sets(self) -> list[tuple[int, ...]]:
        return [points_of(b) for b in self.blocks]


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    n_violations: int = 0


@dataclass(frozen=True)
class SteinerSystem:
    params: DesignParams
    blocks: BlockFamily

    def __post_init__(self):
        if self.params.lam != 1:
            raise DesignError("a Steiner system has lambda = 1")
        report = verify_design(self.params, self.blocks)
        if not report.ok:
            raise DesignError(f"not a Steiner system; first violations: {report.violations[:3]}")

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def v(self) -> int:
        return self.params.v

    def to_json(self) -> str:
        return design_to_json(self.params, self.blocks)


def verify_design(params: DesignParams, blocks: BlockFamily, max_report: int = 20) -> VerificationReport:
    """Check that every t-subset lies in exactly ``params.lam`` blocks."""
    if blocks.v != params.v or blocks.n != params.n:
        raise DesignError(
            f"family is over (v={blocks.v}, n={blocks.n}) but params say (v={params.v}, n={params.n})"
        )
    cover: Counter[int] = Counter()
    for b in blocks:
        for sub in combinations(points_of(b), params.t):
            cover[mask_of(sub)] += 1
    violations = []
    count = 0
    for sub in k_subsets(params.v, params.t):
        c = cover.get(sub, 0)
        if c != params.lam:
            count += 1
            if len(violations) < max_report:
                violations.append((points_of(sub), c))
    return VerificationReport(ok=count == 0, violations=violations, n_violations=count)


def _integral_ratio(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise DesignError(f"{what} = {num}/{den} is not an integer; no such Steiner system exists")
    return q


def block_count(params: DesignParams) -> int:
    """Number of blocks of an S(t,n,v): C(v,t)/C(n,t)."""
    return _integral_ratio(comb(params.v, params.t), comb(params.n, params.t), "block count")


def replication_number(params: DesignParams) -> int:
    """Blocks through a fixed point: C(v-1,t-1)/C(n-1,t-1)."""
    return _integral_ratio(
        comb(params.v - 1, params.t - 1), comb(params.n - 1, params.t - 1), "replication number"
    )


def admissible(params: DesignParams) -> bool:
    """Standard divisibility conditions C(n-i,t-i) | C(v-i,t-i) for 0 <= i < t."""
    return all(
        comb(params.v - i, params.t - i) % comb(params.n - i, params.t - i) == 0
        for i in range(params.t)
    )


def _system(t: int, n: int, v: int, sets: Iterable[Iterable[int]]) -> SteinerSystem:
    return SteinerSystem(DesignParams(t, n, v), BlockFamily.from_sets(v, n, sets))


FANO_BLOCKS = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))

S_2_4_13_BLOCKS = (
    (2, 3, 5, 11), (3, 4, 6, 12), (4, 5, 7, 13), (1, 5, 6, 8), (2, 6, 7, 9),
    (3, 7, 8, 10), (4, 8, 9, 11), (5, 9, 10, 12), (6, 10, 11, 13), (1, 7, 11, 12),
    (2, 8, 12, 13), (1, 3, 9, 13), (1, 2, 4, 10),
)


def fano() -> SteinerSystem:
    """The Fano plane S(2,3,7)."""
    return _system(2, 3, 7, FANO_BLOCKS)


def s_2_4_13() -> SteinerSystem:
    """The projective plane of order 3 as an S(2,4,13)."""
    return _system(2, 4, 13, S_2_4_13_BLOCKS)


def construct_sts(v: int) -> SteinerSystem:
    """A Steiner triple system of order v (Bose for v = 3 mod 6, Skolem for v = 1 mod 6)."""
    if v < 7 or v % 6 not in (1, 3):
        raise DesignError(f"an STS({v}) requires v = 1 or 3 (mod 6) and v >= 7")
    if v % 6 == 3:
        return _system(2, 3, v, _bose(v))
    return _system(2, 3, v, _skolem(v))


def _bose(v: int) -> list[tuple[int, int, int]]:
    order = v // 3  # 2k + 1
    half = (order + 1) // 2  # inverse of 2 mod 2k+1
    op = lambda x, y: (half * (x + y)) % order  # idempotent commutative quasigroup
    pt = lambda x, i: 3 * x + i + 1
    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(order)]
    for i in range(3):
        for x, y in combinations(range(order), 2):
            blocks.append((pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3)))
    return blocks


def _skolem(v: int) -> list[tuple[int, int, int]]:
    k = (v - 1) // 6
    order = 2 * k

    def op(x: int, y: int) -> int:
        # half-idempotent: relabel the addition table of Z_2k
        s = (x + y) % order
        return s // 2 if s % 2 == 0 else k + (s - 1) // 2

    pt = lambda x, i: 3 * x + i + 1
    inf = v
    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(k)]
    for x in range(k):
        for i in range(3):
            blocks.append((inf, pt(x + k, i), pt(x, (i + 1) % 3)))
    for i in range(3):
        for x, y in combinations(range(order), 2):
            blocks.append((pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3)))
    return blocks


def search_design(params: DesignParams, time_budget: float | None = 30.0) -> SteinerSystem | None:
    """Find an S(t,n,v) by exact cover (rows: n-subsets, columns: t-subsets).

    Returns ``None`` when the parameters fail the divisibility conditions or the
    whole search space is exhausted; both are proofs of nonexistence. Raises
    :class:`SearchBudgetExceeded` if ``time_budget`` seconds pass first.
    """
    if params.lam != 1:
        raise DesignError("search_design only handles Steiner systems (lambda = 1)")
    if not admissible(params):
        return None
    cols = list(k_subsets(params.v, params.t))
    col_index = {c: i for i, c in enumerate(cols)}
    rows: list[int] = list(k_subsets(params.v, params.n))
    row_cols = [
        [col_index[mask_of(s)] for s in combinations(points_of(r), params.t)] for r in rows
    ]
    X: dict[int, set[int]] = {i: set() for i in range(len(cols))}
    for r, cs in enumerate(row_cols):
        for c in cs:
            X[c].add(r)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    steps = 0
    solution: list[int] = []

    def select(r: int) -> list[set[int]]:
        removed = []
        for j in row_cols[r]:
            for i in X[j]:
                for k in row_cols[i]:
                    if k != j:
                        X[k].discard(i)
            removed.append(X.pop(j))
        return removed

    def deselect(r: int, removed: list[set[int]]) -> None:
        for j in reversed(row_cols[r]):
            X[j] = removed.pop()
            for i in X[j]:
                for k in row_cols[i]:
                    if k != j:
                        X[k].add(i)

    def solve() -> bool:
        nonlocal steps
        if not X:
            return True
        steps += 1
        if deadline is not None and steps % 256 == 0 and time.monotonic() > deadline:
            raise SearchBudgetExceeded(f"no answer within {time_budget}s")
        c = min(X, key=lambda j: (len(X[j]), j))
        for r in sorted(X[c]):
            solution.append(r)
            removed = select(r)
            if solve():
                return True
            deselect(r, removed)
            solution.pop()
        return False

    if not solve():
        return None
    family = BlockFamily(params.v, params.n, tuple(sorted(rows[r] for r in solution)))
    return SteinerSystem(params, family)


def complement(sys: SteinerSystem | BlockFamily) -> BlockFamily:
    """All n-subsets of 1..v that are not blocks."""
    fam = sys.blocks if isinstance(sys, SteinerSystem) else sys
    taken = set(fam.blocks)
    return BlockFamily(fam.v, fam.n, tuple(b for b in k_subsets(fam.v, fam.n) if b not in taken))


# Design JSON ---------------------------------------------------------------

def design_to_dict(params: DesignParams, blocks: BlockFamily) -> dict:
    return {
        "t": params.t,
        "n": params.n,
        "v": params.v,
        "blocks": [list(b) for b in blocks.as_sets()],
    }


def design_to_json(params: DesignParams, blocks: BlockFamily) -> str:
    d = design_to_dict(params, blocks)
    body = ",\n    ".join(json.dumps(b) for b in d["blocks"])
    return (
        f'{{"t": {d["t"]}, "n": {d["n"]}, "v": {d["v"]}, "blocks": [\n    {body}\n]}}\n'
    )


def design_from_dict(data: dict) -> SteinerSystem:
    try:
        t, n, v = int(data["t"]), int(data["n"]), int(data["v"])
        blocks = data["blocks"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DesignError(f"malformed design JSON: {exc}") from None
    params = DesignParams(t, n, v)
    fam = BlockFamily.from_sets(v, n, blocks)
    return SteinerSystem(params, fam)


def load_design(path: str | Path) -> SteinerSystem:
    with open(path, encoding="utf-8") as fh:
        return design_from_dict(json.load(fh))


def bundled(name: str) -> SteinerSystem:
    """Small systems used throughout the tests and the CLI."""
    name = name.lower()
    if name == "fano":
        return fano()
    if name in ("s2413", "s_2_4_13"):
        return s_2_4_13()
    if name == "sts9":
        return construct_sts(9)
    if name == "sqs8":
        found = search_design(DesignParams(3, 4, 8), time_budget=None)
        assert found is not None
        return found
    raise KeyError(name)


BUNDLED = ("fano", "sts9", "sqs8", "s2413")
