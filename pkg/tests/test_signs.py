from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from signrank.signs import (
    Sign,
    SignFormatError,
    SignMatrix,
    complement,
    flip_rows,
    parse_matrix,
    serialize_matrix,
    sign_of_rational_matrix,
)

from conftest import sign_matrices


def test_sign_enum():
    assert len(Sign) == 3
    assert -Sign.PLUS is Sign.MINUS
    assert -Sign.ZERO is Sign.ZERO
    assert Sign.from_char("-") is Sign.MINUS
    assert Sign.MINUS.symbol == "-"
    with pytest.raises(ValueError):
        Sign.from_char("x")


@pytest.mark.parametrize(
    "v, expected",
    [((1, -1, 0), (-1, 1, 0)), ((0, 0, 0), (0, 0, 0)), ((1, 1, 1), (-1, -1, -1))],
)
def test_complement(v, expected):
    assert complement(v) == expected


@given(st.lists(st.sampled_from((1, -1, 0)), min_size=1, max_size=12))
def test_complement_involution(v):
    assert complement(complement(tuple(v))) == tuple(v)


def test_flip_rows_examples():
    S = SignMatrix(((1, -1), (1, 1)))
    assert flip_rows(S, []) == S
    assert flip_rows(S, {0}) == SignMatrix(((-1, 1), (1, 1)))
    with pytest.raises(IndexError):
        flip_rows(S, {2})


@given(sign_matrices(max_m=5, max_n=5), st.data())
def test_flip_rows_involution(S, data):
    R = data.draw(st.sets(st.integers(0, S.m - 1)))
    assert flip_rows(flip_rows(S, R), R) == S


def test_parse_examples():
    S = parse_matrix("+-\n0+\n")
    assert S.rows == ((1, -1), (0, 1))
    assert not S.strict
    assert parse_matrix("++\n--").strict
    with pytest.raises(SignFormatError):
        parse_matrix("+x")
    with pytest.raises(SignFormatError):
        parse_matrix("++\n+")
    with pytest.raises(SignFormatError):
        parse_matrix("")


@given(sign_matrices(max_m=6, max_n=6))
def test_serialize_roundtrip(S):
    text = serialize_matrix(S)
    assert parse_matrix(text) == S
    assert serialize_matrix(parse_matrix(text)) == text
    assert S.strict == (0 not in {s for r in S.rows for s in r})


def test_sign_of_rational_matrix():
    assert sign_of_rational_matrix([[Fraction(3, 2), -1], [0, 7]]).rows == ((1, -1), (0, 1))
    assert sign_of_rational_matrix([[0, 0], [0, 0]]).rows == ((0, 0), (0, 0))
    eye = [[int(i == j) for j in range(3)] for i in range(3)]
    assert sign_of_rational_matrix(eye).rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@given(
    st.lists(st.lists(st.fractions(max_denominator=50), min_size=3, max_size=3), min_size=1, max_size=4),
    st.fractions(min_value=Fraction(1, 100), max_value=100),
)
def test_sign_positive_scaling(A, c):
    assert sign_of_rational_matrix([[c * x for x in r] for r in A]) == sign_of_rational_matrix(A)


def test_matrix_validation():
    with pytest.raises(ValueError):
        SignMatrix(())
    with pytest.raises(ValueError):
        SignMatrix(((1, 2),))
    with pytest.raises(ValueError):
        SignMatrix(((1,), (1, 1)))
