from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import colex_states
from cobograph.basis import PairBasis


@pytest.mark.parametrize("m,n", [(2, 1), (5, 2), (6, 3), (9, 2), (12, 3)])
def test_dimension_and_enumeration(m, n):
    basis = PairBasis(m, n)
    assert basis.dimension == comb(m, n)
    expected = colex_states(m, n)
    got = [tuple(row) for row in basis.tuples]
    assert got == expected


@pytest.mark.parametrize("m,n", [(5, 2), (7, 3), (25, 2), (14, 3)])
def test_rank_unrank_bijection(m, n):
    basis = PairBasis(m, n)
    for index in range(basis.dimension):
        sites = basis.unrank(index)
        assert basis.rank(sites) == index
    ranks = basis.rank_rows(basis.tuples)
    assert np.array_equal(ranks, np.arange(basis.dimension))


def test_rank_rejects_bad_tuples():
    basis = PairBasis(6, 2)
    with pytest.raises(ValueError):
        basis.rank((3, 3))
    with pytest.raises(ValueError):
        basis.rank((4, 2))
    with pytest.raises(ValueError):
        basis.rank((0, 6))
    with pytest.raises(ValueError):
        basis.unrank(basis.dimension)


def test_unsupported_pair_counts():
    with pytest.raises(ValueError):
        PairBasis(10, 4)
    with pytest.raises(ValueError):
        PairBasis(2, 3)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_rank_unrank_random(data):
    n = data.draw(st.sampled_from([1, 2, 3]))
    m = data.draw(st.integers(n, 60))
    basis = PairBasis(m, n)
    index = data.draw(st.integers(0, basis.dimension - 1))
    assert basis.rank(basis.unrank(index)) == index


def test_colex_block_structure():
    # states with largest site l form a contiguous block of size C(l, n-1)
    basis = PairBasis(8, 3)
    tuples = basis.tuples
    for l in range(2, 8):
        block = tuples[[i for i, t in enumerate(tuples) if t[2] == l]]
        assert len(block) == comb(l, 2)
