"""Closed-form invariants of complement configurations of Steiner systems.

All arithmetic is exact (``int`` and ``fractions.Fraction``). Every function
takes a :class:`~steinerkit.designs.DesignParams` and never looks at blocks,
so results can be checked against the enumeration oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor

from .designs import DesignParams, DesignError, block_count, replication_number
from .simplicial import BettiTable, HVector, finite_difference


@dataclass(frozen=True)
class AlphaDecomposition:
    m: int
    p: int
    q: int
    alpha: int


def alpha_formula(params: DesignParams, m: int) -> AlphaDecomposition:
    """Initial degree of the m-th symbolic power, with m = p*n + q."""
    if m < 1:
        raise ValueError("m must be positive")
    v, n = params.v, params.n
    p, q = divmod(m, n)
    if q == 0:
        base = 0
    elif q == 1:
        base = v - n
    else:
        base = v - n + q
    return AlphaDecomposition(m, p, q, base + p * v)


def waldschmidt(params: DesignParams) -> Fraction:
    return Fraction(params.v, params.n)


def h_vector_formula(params: DesignParams) -> HVector:
    v, n = params.v, params.n
    head = [comb(n - 1 + i, n - 1) for i in range(v - n)]
    return HVector(tuple(head + [comb(v - 1, n - 1) - block_count(params)]))


def degree(params: DesignParams) -> int:
    """Number of points in the complement configuration."""
    return comb(params.v, params.n) - block_count(params)


def regularity(params: DesignParams) -> int:
    return params.v - params.n + 1


@dataclass(frozen=True)
class TopGenerators:
    """Count of minimal generators in degree v - n + 1."""

    value: int
    signed: int  # n|B| - C(v, n-1), as the closed form reads
    is_zero: bool


def beta0_top(params: DesignParams) -> TopGenerators:
    signed = params.n * block_count(params) - comb(params.v, params.n - 1)
    return TopGenerators(abs(signed), signed, params.t == params.n - 1)


def _k_polynomial(params: DesignParams) -> list[int]:
    """Coefficients of (1 - x)^n h(x): the numerator over a ring in n + 1 variables."""
    h = list(h_vector_formula(params).entries)
    return finite_difference(h + [0] * (params.n + 1), params.n)


def betti_table_formula(params: DesignParams, strict: bool = True) -> BettiTable:
    """Two-strand Betti table of the complement configuration's ideal.

    beta[0, v-n] = |B| and beta[i, v-n+1+i] = (-1)**(i+1) * (Delta^n h)(v-n+1+i).
    The closed form is established for t = n - 1; with ``strict=False`` the same
    two-strand reading is applied for t < n - 1 as well.
    """
    if strict and params.t != params.n - 1:
        raise ValueError("the two-strand Betti formula is only asserted for t = n - 1")
    v, n = params.v, params.n
    diff = _k_polynomial(params)
    values = {(0, v - n): block_count(params)}
    for i in range(n):
        j = v - n + 1 + i
        b = (-1) ** (i + 1) * (diff[j] if j < len(diff) else 0)
        if b < 0:
            raise ArithmeticError(f"negative Betti number at ({i}, {j}): {b}")
        if b:
            values[(i, j)] = b
    return BettiTable(values)


def omega(params: DesignParams) -> int:
    """Largest degree of a minimal generator."""
    v, n = params.v, params.n
    return v - n if params.t == n - 1 else v - n + 1


@dataclass(frozen=True)
class ResurgenceBounds:
    lower: Fraction
    upper: Fraction
    asymptotic_equality: bool  # lower bound equals the asymptotic resurgence


def resurgence_bounds(params: DesignParams) -> ResurgenceBounds:
    v, n = params.v, params.n
    return ResurgenceBounds(
        Fraction((v - n) * n, v), Fraction((v - n + 1) * n, v), params.t == n - 1
    )


def noncontainment_threshold(params: DesignParams, m: int) -> Fraction:
    """Every integer d strictly above the returned value has I^(m) not inside I^d.

    This is alpha(I^(m)) / alpha(I): below that ratio a degree count already
    rules containment out. For m = 1 (mod n) it reads 1 + (m-1)v / (n(v-n)).
    """
    if m < 1:
        raise ValueError("m must be positive")
    return Fraction(alpha_formula(params, m).alpha, params.v - params.n)


def containment_gap(params: DesignParams, m: int) -> int:
    a = alpha_formula(params, m).alpha
    return floor(Fraction(a, alpha_formula(params, 1).alpha * regularity(params)))


def sts_distances(v: int) -> tuple[int, int]:
    """Minimum distances of the codes from an STS(v) configuration and its complement."""
    if v < 7 or v % 6 not in (1, 3):
        raise DesignError(f"no STS({v}): need v = 1 or 3 (mod 6)")
    return (v - 1) * (v - 3) // 6, (v - 1) * (v - 3) ** 2 // 6


def hyp_formulas(params: DesignParams) -> tuple[int, int]:
    """Most points on one hyperplane for the Steiner configuration and its complement."""
    r = replication_number(params)
    return r, comb(params.v - 1, params.n - 1) - r


def distance_formulas(params: DesignParams) -> tuple[int, int]:
    hyp_b, hyp_c = hyp_formulas(params)
    return block_count(params) - hyp_b, degree(params) - hyp_c


def star_distance(params: DesignParams) -> int:
    """Distance for the full star configuration: C(v,n) - C(v-1,n-1)."""
    return comb(params.v, params.n) - comb(params.v - 1, params.n - 1)


def mds_check(params: DesignParams) -> tuple[bool, bool]:
    hyp_b, hyp_c = hyp_formulas(params)
    return params.n == hyp_b, params.n == hyp_c
