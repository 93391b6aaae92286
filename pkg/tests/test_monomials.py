from math import comb

import numpy as np
import pytest

from steinerkit.designs import BlockFamily, FANO_BLOCKS, complement, fano, mask_of
from steinerkit.monomials import (
    CoverIdealSpec,
    DegreeCapExceeded,
    HilbertSeries,
    alpha_symbolic,
    alpha_witness,
    containment_witness,
    count_compositions,
    hilbert_function,
    in_ordinary_power,
    in_symbolic_power,
    iter_compositions,
    minimal_generators,
    squarefree,
)


def test_membership_examples(fano_J):
    assert in_symbolic_power(squarefree(7, [4, 5, 6, 7]), fano_J, 1)
    assert not in_symbolic_power((0,) * 7, fano_J, 1)
    assert in_symbolic_power((1,) * 7, fano_J, 3)
    with pytest.raises(ValueError):
        in_symbolic_power((1, 1), fano_J, 1)


def test_batch_membership_agrees(fano_J):
    rng = np.random.default_rng(0)
    batch = rng.integers(0, 4, size=(300, 7))
    mask = fano_J.members(batch, 3)
    for row, hit in zip(batch, mask):
        assert hit == in_symbolic_power(tuple(row), fano_J, 3)


def test_compositions_complete_and_colex():
    rows = np.vstack(list(iter_compositions(4, 3)))
    assert len(rows) == comb(6, 2)
    assert len({tuple(r) for r in rows}) == len(rows)
    assert (rows.sum(axis=1) == 4).all()
    keys = [tuple(reversed(r)) for r in rows.tolist()]
    assert keys == sorted(keys)


def test_compositions_chunked_matches_whole():
    whole = np.vstack(list(iter_compositions(6, 5)))
    chunked = np.vstack(list(iter_compositions(6, 5, chunk=7)))
    assert (whole == chunked).all()


def test_capped_count():
    rows = np.vstack(list(iter_compositions(7, 4, cap=2)))
    assert len(rows) == count_compositions(7, 4, 2)
    assert rows.max() <= 2


@pytest.mark.parametrize("k,alpha", [(1, 4), (3, 7), (4, 11)])
def test_alpha_fano(fano_J, k, alpha):
    assert alpha_symbolic(fano_J, k) == alpha


def test_alpha_fano_second_power(fano_J):
    # v - n + q with q = 2; exhaustive scan of degree 5 finds nothing
    d, wit = alpha_witness(fano_J, 2)
    assert d == 6
    assert in_symbolic_power(wit, fano_J, 2)


def test_alpha_cap(fano_J):
    with pytest.raises(DegreeCapExceeded):
        alpha_symbolic(fano_J, 3, degree_cap=6)


def test_hilbert_function_examples(fano_J):
    assert hilbert_function(fano_J, 1, 0) == 1
    assert hilbert_function(fano_J, 1, 3) == 84
    assert hilbert_function(fano_J, 1, 4) == comb(10, 6) - 7


@pytest.mark.parametrize("k", [1, 2, 3])
def test_series_matches_direct(fano_J, k):
    series = HilbertSeries(fano_J, k)
    assert series.values(9) == [hilbert_function(fano_J, k, d) for d in range(10)]


def test_minimal_generators_fano(fano_J):
    gens = minimal_generators(fano_J)
    expected = {squarefree(7, [p for p in range(1, 8) if p not in b]) for b in FANO_BLOCKS}
    assert set(gens) == expected


def test_minimal_generators_s2413(cover_ideals):
    degs = [sum(g) for g in minimal_generators(cover_ideals["s2413"])]
    assert degs.count(9) == 13 and degs.count(10) == 234 and len(degs) == 247


def test_single_block_generators():
    J = CoverIdealSpec(BlockFamily(7, 3, (mask_of((2, 5, 6)),)))
    assert set(minimal_generators(J)) == {squarefree(7, [p]) for p in (2, 5, 6)}


def test_ordinary_power(fano_J):
    g = minimal_generators(fano_J)
    prod = tuple(a + b for a, b in zip(g[0], g[3]))
    assert in_ordinary_power(prod, g, 2)
    assert not in_ordinary_power((1, 1, 1, 1, 1, 1, 1), g, 2)
    assert not in_ordinary_power((2, 1, 1, 1, 1, 0, 1), g, 2)
    with pytest.raises(ValueError):
        in_ordinary_power(prod, g, 5)


def test_containment_witness_fano(fano_J):
    wit = containment_witness(fano_J, 3, 2)
    assert wit is not None and sum(wit) == 7
    assert in_symbolic_power(wit, fano_J, 3)
    assert not in_ordinary_power(wit, minimal_generators(fano_J), 2)


@pytest.mark.parametrize("k", [1, 2])
def test_no_witness_for_d1(fano_J, k):
    assert containment_witness(fano_J, k, 1) is None


def test_empty_family_rejected():
    with pytest.raises(ValueError):
        CoverIdealSpec(BlockFamily(7, 3, ()))
