"""Randomized property checks over one bundled instance.

Each check draws ``samples`` cases from a seeded generator and returns the
number of cases checked; a failing case raises AssertionError with the case.
"""

from __future__ import annotations

import numpy as np

from steinerkit.designs import SteinerSystem, complement
from steinerkit.formulas import alpha_formula
from steinerkit.monomials import CoverIdealSpec, in_ordinary_power, in_symbolic_power, minimal_generators
from steinerkit.simplicial import _reduced_homology, delta_of_family


def _level(J: CoverIdealSpec, m) -> int:
    """Largest k with m in the k-th symbolic power."""
    return int(J.block_degrees(np.asarray([m]))[0].min())


def _monomial(rng, v: int, top: int = 4) -> tuple[int, ...]:
    return tuple(int(x) for x in rng.integers(0, top, size=v))


def monotonicity(J: CoverIdealSpec, rng, samples: int) -> int:
    for _ in range(samples):
        m = _monomial(rng, J.v)
        k = int(rng.integers(2, 8))
        if in_symbolic_power(m, J, k):
            assert in_symbolic_power(m, J, k - 1), (m, k)
        else:
            assert not in_symbolic_power(m, J, k + 1), (m, k)
    return samples


def product_rule(J: CoverIdealSpec, rng, samples: int) -> int:
    for _ in range(samples):
        m1, m2 = _monomial(rng, J.v), _monomial(rng, J.v)
        a, b = _level(J, m1), _level(J, m2)
        prod = tuple(x + y for x, y in zip(m1, m2))
        assert in_symbolic_power(prod, J, a + b), (m1, m2, a, b)
    return samples


def ordinary_in_symbolic(J: CoverIdealSpec, rng, samples: int) -> int:
    gens = minimal_generators(J)
    for _ in range(samples):
        d = int(rng.integers(1, 4))
        picks = rng.integers(0, len(gens), size=d)
        m = np.asarray(_monomial(rng, J.v, 2))
        for g in picks:
            m = m + np.asarray(gens[g])
        m = tuple(int(x) for x in m)
        assert in_ordinary_power(m, gens, d), (m, d)
        assert in_symbolic_power(m, J, d), (m, d)
    return samples


def derivative(J: CoverIdealSpec, rng, samples: int) -> int:
    done = 0
    while done < samples:
        m = _monomial(rng, J.v)
        k = _level(J, m)
        support = [i for i, a in enumerate(m) if a]
        if k < 1 or not support:
            continue
        j = support[int(rng.integers(len(support)))]
        lowered = m[:j] + (m[j] - 1,) + m[j + 1:]
        assert in_symbolic_power(lowered, J, k - 1), (m, j, k)
        done += 1
    return done


def saturation(J: CoverIdealSpec, rng, samples: int) -> int:
    n = J.family.n
    for _ in range(samples):
        m = _monomial(rng, J.v)
        k = int(rng.integers(n, 3 * n + 1))
        bumped = tuple(a + 1 for a in m)
        assert in_symbolic_power(bumped, J, k) == in_symbolic_power(m, J, k - n), (m, k)
    return samples


def alpha_step(system: SteinerSystem, rng, samples: int) -> int:
    p = system.params
    for m in rng.integers(1, 10_000, size=samples):
        m = int(m)
        a, b = alpha_formula(p, m).alpha, alpha_formula(p, m + p.n).alpha
        assert b == a + p.v, (m, a, b)
        assert alpha_formula(p, m + 1).alpha > a, m
    return samples


def regularity_bound(system: SteinerSystem, rng, samples: int) -> int:
    """Induced subcomplexes on random vertex sets never give beta[i, j] with j - i > v - n + 1."""
    K = delta_of_family(complement(system))
    faces, sizes = K.faces, K.face_sizes
    v, n = system.v, system.n
    for W in rng.integers(1, 1 << v, size=samples):
        W = int(W)
        j = bin(W).count("1")
        inside = (faces & ~W) == 0
        for dim, b in _reduced_homology(faces[inside], sizes[inside], j, 32003).items():
            i = j - dim - 2
            if b and i >= 0:
                assert j - i <= v - n + 1, (W, i, j)
    return samples


CHECKS = {
    "monotonicity": monotonicity,
    "product rule": product_rule,
    "ordinary in symbolic": ordinary_in_symbolic,
    "derivative": derivative,
    "saturation": saturation,
}
SYSTEM_CHECKS = {"alpha step": alpha_step, "regularity bound": regularity_bound}


def run_all(system: SteinerSystem, seed: int = 20240611, samples: int = 1000) -> dict[str, int]:
    J = CoverIdealSpec(complement(system))
    counts = {}
    for name, fn in CHECKS.items():
        counts[name] = fn(J, np.random.default_rng(seed), samples)
    for name, fn in SYSTEM_CHECKS.items():
        counts[name] = fn(system, np.random.default_rng(seed), samples)
    return counts
