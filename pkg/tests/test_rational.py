from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from signrank.rational import (
    format_rational_matrix,
    matmul,
    nullspace,
    parse_rational_matrix,
    rational_rank,
    rref,
)


def test_rank_examples():
    assert rational_rank([[0, 0], [0, 0]]) == 0
    for k in range(1, 5):
        assert rational_rank([[int(i == j) for j in range(k)] for i in range(k)]) == k
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[Fraction(1, 3), Fraction(2, 7)], [Fraction(2, 3), Fraction(4, 7)]]) == 1


small_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=n, max_size=n),
        min_size=1,
        max_size=5,
    )
)


@given(small_matrices)
def test_bareiss_matches_rref(A):
    _, pivots = rref(A)
    assert rational_rank(A) == len(pivots)


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_rank_of_product_bounded(m, r, n, seed):
    g = np.random.default_rng(seed)
    U = [[Fraction(int(x)) for x in row] for row in g.integers(-3, 4, (m, r))]
    V = [[Fraction(int(x)) for x in row] for row in g.integers(-3, 4, (r, n))]
    assert rational_rank(matmul(U, V)) <= r


@given(small_matrices)
def test_nullspace_is_null(A):
    n = len(A[0])
    N = nullspace(A)
    assert len(N) == n - rational_rank(A)
    for v in N:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)


def test_matrix_text_roundtrip():
    text = "1 -1/2 3\n0 7/3 -4\n"
    assert format_rational_matrix(parse_rational_matrix(text)) == text
    with pytest.raises(ValueError):
        parse_rational_matrix("1 2\n3")
    with pytest.raises(ValueError):
        parse_rational_matrix("1 x")
    with pytest.raises(ValueError):
        matmul([[1, 2]], [[1, 2]])
