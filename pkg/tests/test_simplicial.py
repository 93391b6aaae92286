from math import comb

import pytest

from steinerkit.designs import BlockFamily, DesignParams, complement, mask_of
from steinerkit.monomials import CoverIdealSpec, HilbertSeries
from steinerkit.simplicial import (
    RATIONALS,
    CohenMacaulayViolation,
    HVector,
    SimplicialComplex,
    delta_of_family,
    f_vector,
    finite_difference,
    h_vector_oracle,
    hochster_betti,
    is_face,
    is_matroid,
    reduced_homology_rank,
    small_faces_check,
)

EXPECTED_BETTI = {
    "fano": {(0, 4): 7, (1, 6): 14, (2, 7): 8},
    "sts9": {(0, 6): 12, (1, 8): 27, (2, 9): 16},
    "sqs8": {(0, 4): 14, (1, 6): 56, (2, 7): 64, (3, 8): 21},
    "s2413": {(0, 9): 13, (0, 10): 234, (1, 11): 702, (2, 12): 663, (3, 13): 207},
}


@pytest.fixture(scope="module")
def betti_tables(systems):
    return {name: hochster_betti(complement(s)) for name, s in systems.items()}


def test_delta_fano(systems):
    K = delta_of_family(complement(systems["fano"]))
    assert len(K.facets) == 28
    assert all(bin(f).count("1") == 4 for f in K.facets)
    assert f_vector(K)[3] == 28
    assert f_vector(K).dim == 3


def test_delta_single_block():
    K = delta_of_family(BlockFamily(7, 3, (mask_of((1, 2, 3)),)))
    assert K.facets == (mask_of((4, 5, 6, 7)),)


def test_delta_uniform():
    K = delta_of_family(BlockFamily.all_subsets(3, 7))
    assert len(K.facets) == comb(7, 4)
    assert f_vector(K)[3] == 35


def test_is_face(systems):
    K = delta_of_family(complement(systems["fano"]))
    assert is_face(K, ())
    assert is_face(K, K.facets[0])
    assert not is_face(K, range(1, 8))


def test_nested_facets_rejected():
    with pytest.raises(ValueError):
        SimplicialComplex(4, (mask_of((1, 2)), mask_of((1, 2, 3))))


def test_simplex_f_vector():
    K = SimplicialComplex(5, (mask_of((1, 2, 3, 4)),))
    assert f_vector(K).counts == tuple(comb(4, i) for i in range(5))


def test_matroids(systems):
    for s in systems.values():
        K = delta_of_family(complement(s))
        assert is_matroid(K)
        assert small_faces_check(K, s.params)


def test_non_matroid_witness():
    K = SimplicialComplex.from_faces(4, [(1, 2), (3, 4)])
    check = is_matroid(K)
    assert not check
    bigger, smaller = check.larger, check.smaller
    assert len(bigger) > len(smaller)
    assert is_face(K, bigger) and is_face(K, smaller)
    for x in set(bigger) - set(smaller):
        assert not is_face(K, set(smaller) | {x})


def test_small_faces_trivial():
    K = SimplicialComplex(3, (mask_of((1,)),))
    assert small_faces_check(K, DesignParams(2, 3, 3))


def test_homology_examples():
    empty = SimplicialComplex(3, (0,))
    assert reduced_homology_rank(empty, -1) == 1
    circle = SimplicialComplex.from_faces(3, [(1, 2), (2, 3), (1, 3)])
    assert reduced_homology_rank(circle, 1) == 1
    assert reduced_homology_rank(circle, 0) == 0
    simplex = SimplicialComplex(4, (mask_of((1, 2, 3, 4)),))
    for dim in range(-1, 4):
        assert reduced_homology_rank(simplex, dim) == 0
        assert reduced_homology_rank(simplex, dim, field=RATIONALS) == 0


def test_two_points():
    K = SimplicialComplex.from_faces(2, [(1,), (2,)])
    assert reduced_homology_rank(K, 0) == 1


@pytest.mark.parametrize("name", list(EXPECTED_BETTI))
def test_hochster(betti_tables, name):
    assert betti_tables[name].nonzero() == EXPECTED_BETTI[name]


def test_fano_linear_strand_gap(betti_tables):
    assert betti_tables["fano"][(1, 5)] == 0


@pytest.mark.parametrize("name", ["fano", "sts9", "sqs8", "s2413"])
def test_field_independence(systems, betti_tables, name):
    assert hochster_betti(complement(systems[name]), field=RATIONALS) == betti_tables[name]


def test_principal_ideal():
    # one minimal non-face: the Stanley-Reisner ideal is principal
    K = SimplicialComplex.from_faces(3, [(1, 2), (2, 3), (1, 3)])
    assert hochster_betti(K).nonzero() == {(0, 3): 1}


def test_regularity_bound(systems, betti_tables):
    for name, s in systems.items():
        for (i, j) in betti_tables[name].nonzero():
            assert j <= s.v
            assert j - i <= s.v - s.n + 1


def test_alternating_sums_match_hilbert(systems, betti_tables):
    for name, s in systems.items():
        if s.v > 9:
            continue
        series = HilbertSeries(CoverIdealSpec(complement(s)), 1)
        kpoly = finite_difference(series.values(s.v + 2), s.v)
        sums = betti_tables[name].alternating_sums()
        assert kpoly[0] == 1
        for j in range(1, s.v + 3):
            assert -kpoly[j] == sums.get(j, 0)


H_EXPECTED = {
    "fano": (1, 3, 6, 10, 8),
    "sts9": (1, 3, 6, 10, 15, 21, 16),
    "sqs8": (1, 4, 10, 20, 21),
    "s2413": (1, 4, 10, 20, 35, 56, 84, 120, 165, 207),
}


@pytest.mark.parametrize("name", list(H_EXPECTED))
def test_h_vector_oracle(systems, name):
    s = systems[name]
    h = h_vector_oracle(complement(s))
    assert h.entries == H_EXPECTED[name]
    assert h.degree == comb(s.v, s.n) - len(s.blocks)


def test_h_vector_cap_too_small(systems):
    with pytest.raises(CohenMacaulayViolation):
        h_vector_oracle(complement(systems["fano"]), 1, degree_cap=3)


def test_hvector_validation():
    with pytest.raises(ValueError):
        HVector((2, 1))
    with pytest.raises(ValueError):
        HVector((1, 2, 0))
    assert HVector((1, 3, 2)).is_unimodal()
    assert not HVector((1, 3, 2, 3)).is_unimodal()
