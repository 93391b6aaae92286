from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from steinerkit.designs import BUNDLED, BlockFamily, k_subsets, mask_of, points_of
from steinerkit.linalg import det, kernel_vector, primitive, rank, rank_mod_p, sparse_rank
from steinerkit.monomials import CoverIdealSpec

from . import properties

SEED = 20240611


@pytest.mark.parametrize("check", list(properties.CHECKS))
@pytest.mark.parametrize("name", BUNDLED)
def test_monomial_properties(cover_ideals, name, check):
    rng = np.random.default_rng(SEED)
    assert properties.CHECKS[check](cover_ideals[name], rng, 1000) == 1000


@pytest.mark.parametrize("check", list(properties.SYSTEM_CHECKS))
@pytest.mark.parametrize("name", BUNDLED)
def test_system_properties(systems, name, check):
    rng = np.random.default_rng(SEED)
    assert properties.SYSTEM_CHECKS[check](systems[name], rng, 1000) == 1000


small_ints = st.integers(-20, 20)


def _square(size):
    return st.lists(st.lists(small_ints, min_size=size, max_size=size), min_size=size, max_size=size)


@settings(derandomize=True, max_examples=200)
@given(st.integers(1, 5).flatmap(_square))
def test_det_matches_rank(m):
    assert (det(m) != 0) == (rank(m) == len(m))


@settings(derandomize=True, max_examples=200)
@given(st.integers(1, 4).flatmap(lambda k: st.lists(
    st.lists(small_ints, min_size=k + 1, max_size=k + 1), min_size=k, max_size=k)))
def test_kernel_vector(m):
    if rank(m) < len(m):
        with pytest.raises(ValueError):
            kernel_vector(m)
        return
    x = kernel_vector(m)
    assert all(sum(a * b for a, b in zip(row, x)) == 0 for row in m)
    assert primitive(x) == x


@settings(derandomize=True, max_examples=200)
@given(st.lists(small_ints, min_size=1, max_size=6).filter(any), st.integers(-9, 9).filter(bool))
def test_primitive_scale_invariant(vec, c):
    p = primitive(vec)
    assert primitive([c * x for x in vec]) == p
    assert primitive([Fraction(x, 7) for x in vec]) == p
    assert primitive(p) == p


@settings(derandomize=True, max_examples=150)
@given(st.integers(1, 6).flatmap(lambda r: st.lists(
    st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=r, max_size=r)))
def test_rank_routes_agree(m):
    r = rank(m)
    rows = [{c: x for c, x in enumerate(row) if x} for row in m]
    assert sparse_rank(rows) == r
    assert rank_mod_p(np.array(m), 32003) == r
    assert sparse_rank(rows, 32003) == r


@settings(derandomize=True, max_examples=100)
@given(st.integers(2, 10).flatmap(lambda v: st.tuples(st.just(v), st.integers(1, v))))
def test_k_subsets(vk):
    v, k = vk
    subs = list(k_subsets(v, k))
    assert subs == sorted(subs)
    assert all(len(points_of(s)) == k for s in subs)
    assert len(set(subs)) == len(subs)


@settings(derandomize=True, max_examples=100)
@given(st.lists(st.integers(0, 3), min_size=6, max_size=6), st.integers(1, 6))
def test_members_batch_matches_scalar(m, k):
    fam = BlockFamily(6, 3, tuple(k_subsets(6, 3))[::3])
    J = CoverIdealSpec(fam)
    scalar = all(sum(m[p - 1] for p in points_of(b)) >= k for b in fam)
    assert bool(J.members(np.array([m]), k)[0]) == scalar
