"""Exact and modular linear algebra on small integer matrices.

Everything here works on plain Python integers (or ``Fraction``) except
:func:`rank_mod_p`, which uses dense ``int64`` numpy arrays and is only
valid for primes below 2**31.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

DEFAULT_PRIME = 32003


def primitive(vec: Sequence[int | Fraction]) -> tuple[int, ...]:
    """Scale a non-zero rational vector to coprime integers, first non-zero entry positive."""
    fracs = [Fraction(x) for x in vec]
    if not any(fracs):
        raise ValueError("zero vector has no primitive form")
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            row_i = a[i]
            factor = row_i[k]
            row_k = a[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[-1][-1]


def rank(matrix: Sequence[Sequence[int | Fraction]]) -> int:
    """Exact rank over the rationals."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                q = f / lead
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def kernel_vector(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Spanning vector of the kernel of a full-rank k x (k+1) integer matrix.

    Uses signed maximal minors, so the result is exact and already integral.
    Raises ``ValueError`` when the rows are dependent.
    """
    k = len(matrix)
    width = k + 1
    if any(len(row) != width for row in matrix):
        raise ValueError("expected a k x (k+1) matrix")
    out = []
    for j in range(width):
        minor = [[row[c] for c in range(width) if c != j] for row in matrix]
        out.append((-1) ** j * det(minor))
    if not any(out):
        raise ValueError("rows are linearly dependent")
    return primitive(out)


def rank_mod_p(matrix: np.ndarray, p: int = DEFAULT_PRIME) -> int:
    """Rank of an integer matrix over GF(p) by dense Gaussian elimination."""
    if p >= 2**31:
        raise ValueError("prime too large for int64 elimination")
    a = np.array(matrix, dtype=np.int64) % p
    if a.ndim != 2 or a.size == 0:
        return 0
    if a.shape[0] > a.shape[1]:
        a = a.T.copy()
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        below = a[r + 1:, c]
        hit = np.flatnonzero(below)
        if hit.size:
            rows = r + 1 + hit
            a[rows, c:] = (a[rows, c:] - np.outer(a[rows, c], a[r, c:])) % p
        r += 1
    return r


def sparse_rank(rows: Iterable[dict[int, int]], p: int = 0) -> int:
    """Rank of a sparse integer matrix given as ``{column: value}`` rows.

    ``p == 0`` computes the rank over the rationals with fraction-free integer
    row operations (content is divided out after every update); otherwise the
    rank over GF(p).
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: (v % p if p else v) for c, v in raw.items()}
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                if p:
                    inv = pow(row[c], p - 2, p)
                    row = {k: (v * inv) % p for k, v in row.items()}
                else:
                    g = 0
                    for v in row.values():
                        g = gcd(g, v)
                    row = {k: v // g for k, v in row.items()}
                pivots[c] = row
                break
            f = row[c]
            if p:
                # pivot rows are monic mod p
                for k, v in prow.items():
                    nv = (row.get(k, 0) - f * v) % p
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                lead = prow[c]
                g = gcd(lead, f)
                sa, sb = lead // g, f // g
                new = {k: v * sa for k, v in row.items()}
                for k, v in prow.items():
                    nv = new.get(k, 0) - sb * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                row = {k: v // g for k, v in new.items()} if g > 1 else new
    return len(pivots)
