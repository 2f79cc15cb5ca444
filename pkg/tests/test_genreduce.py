from hypothesis import given, settings, strategies as st

from signrank.chain import verify_rank2_witness
from signrank.genreduce import GT2, STRICT, ZERO, lift_witness, minrank_le2, reduce_generalized
from signrank.oracle import minrank2_oracle
from signrank.signs import SignMatrix, flip_rows

from conftest import sign_matrices


def same_columns(a: SignMatrix, b: SignMatrix) -> bool:
    return sorted(a.columns()) == sorted(b.columns())


def test_all_zero():
    out = reduce_generalized(SignMatrix(((0, 0), (0, 0))))
    assert out.kind == ZERO and out.matrix is None
    res = minrank_le2(SignMatrix(((0, 0, 0),)))
    assert res and verify_rank2_witness(res.outcome.source, res.witness)


def test_strict_input_unchanged():
    S = SignMatrix(((1, -1), (1, 1)))
    out = reduce_generalized(S)
    assert out.kind == STRICT and out.matrix == S and out.trace == ()


def test_single_zero_is_split():
    out = reduce_generalized(SignMatrix(((0, 1), (1, 1))))
    assert out.kind == STRICT
    assert same_columns(out.matrix, SignMatrix(((1, -1, 1), (1, 1, 1))))
    assert [t.step for t in out.trace] == [2, 5]


def test_identity_2x2():
    res = minrank_le2(SignMatrix(((1, 0), (0, 1))))
    assert res and res.outcome.kind == STRICT
    assert verify_rank2_witness(res.outcome.source, res.witness)


def test_failure_steps():
    # staircase of zeros: both fail and the oracle agrees
    step3 = SignMatrix(((-1, -1, -1), (0, -1, -1), (0, 0, -1)))
    out = reduce_generalized(step3)
    assert out.kind == GT2 and out.failing_step == 3 and out.witness_rows
    step4 = SignMatrix(((-1, -1, -1), (-1, -1, 0), (-1, 0, 0)))
    out = reduce_generalized(step4)
    assert out.kind == GT2 and out.failing_step == 4
    assert not minrank2_oracle(step3) and not minrank2_oracle(step4)


def test_duplicate_rows_under_common_zeros():
    S = SignMatrix(((0, 0, 1), (0, 0, -1), (1, 1, 1)))
    out = reduce_generalized(S)
    assert out.kind == STRICT
    assert out.matrix.m == 2
    assert 4 in [t.step for t in out.trace]
    res = minrank_le2(S)
    assert res and verify_rank2_witness(S, res.witness)


@settings(max_examples=300)
@given(sign_matrices(max_m=5, max_n=5))
def test_decision_matches_oracle(S):
    res = minrank_le2(S)
    assert bool(res) == minrank2_oracle(S)
    if res:
        assert verify_rank2_witness(S, res.witness)
    if res.outcome.kind == GT2:
        assert not minrank2_oracle(S)


@settings(max_examples=200)
@given(sign_matrices(max_m=5, max_n=4))
def test_reduction_preserves_answer(S):
    out = reduce_generalized(S)
    if out.kind == STRICT:
        assert out.matrix.strict
        assert out.matrix.m <= S.m
        assert minrank2_oracle(out.matrix) == minrank2_oracle(S)


@settings(max_examples=200)
@given(sign_matrices(max_m=5, max_n=5))
def test_lift_of_strict_witness(S):
    res = minrank_le2(S)
    if res.strict_witness is not None:
        assert verify_rank2_witness(res.outcome.matrix, res.strict_witness)
        assert verify_rank2_witness(S, lift_witness(res.outcome, res.strict_witness))


@settings(max_examples=200)
@given(sign_matrices(max_m=5, max_n=5), st.randoms(use_true_random=False))
def test_invariance(S, r):
    base = bool(minrank_le2(S))
    rows = list(S.rows)
    r.shuffle(rows)
    T = SignMatrix(tuple(rows))
    cols = list(T.columns())
    r.shuffle(cols)
    T = SignMatrix.from_columns(cols)
    T = flip_rows(T, [i for i in range(T.m) if r.random() < 0.5])
    assert bool(minrank_le2(T)) == base
    assert bool(minrank_le2(T.transpose())) == base
