import random
from fractions import Fraction
from itertools import chain, combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from signrank.geometry import Arrangement, Line, enumerate_covectors, random_arrangement
from signrank.matroid import (
    OrientedMatroidCovectors,
    PointLineRealization,
    build_matrix_lemma_main,
    build_matrix_lemma_main2,
    c1_by_adjacency,
    compare_c2,
    find_reorientation,
    mat_of,
    parse_covectors,
    realization_from_arrangement,
    reconstruct_from_C2,
    reorient,
    serialize_covectors,
    verify_rank3_witness,
)
from signrank.signs import SignFormatError, SignMatrix

CROSS = Arrangement((Line(1, 0, 0), Line(0, 1, 0)))


def powerset(n):
    return chain.from_iterable(combinations(range(n), k) for k in range(n + 1))


def brute_reorientations(L1, L2, n):
    return [A for A in powerset(n) if reorient(L1, A) == frozenset(L2)]


def test_reorient_examples():
    L = {(1, -1, 0), (0, 1, 1)}
    assert reorient(L, ()) == frozenset(L)
    assert reorient(L, (0, 2)) == {(-1, -1, 0), (0, 1, -1)}
    assert reorient(reorient(L, (1,)), (1,)) == frozenset(L)


def test_find_reorientation_examples():
    L = {(1, 1), (1, -1)}
    assert find_reorientation(L, L) == ()
    assert find_reorientation(L, {(-1, 1), (-1, -1)}) == (0,)
    assert find_reorientation(L, {(1, 1), (1, 0)}) is None
    # symmetric under flipping line 1, so both () and (1,) work; least wins
    assert find_reorientation({(1, 1), (1, -1), (1, 0)}, {(1, 1), (1, -1), (1, 0)}) == ()


@st.composite
def covector_family(draw):
    n = draw(st.integers(1, 4))
    vecs = st.tuples(*[st.sampled_from((1, -1, 0))] * n)
    return n, frozenset(draw(st.sets(vecs, min_size=1, max_size=8)))


@settings(max_examples=300)
@given(covector_family(), st.data())
def test_find_reorientation_matches_brute_force(fam, data):
    n, L1 = fam
    if data.draw(st.booleans()):
        A = data.draw(st.sets(st.integers(0, n - 1)))
        L2 = reorient(L1, A)
    else:
        _, L2 = data.draw(covector_family().filter(lambda f: f[0] == n))
    brute = brute_reorientations(L1, L2, n)
    got = find_reorientation(L1, L2)
    assert got == (min(brute) if brute else None)


def test_reconstruct_two_crossing_lines():
    cs = enumerate_covectors(CROSS)
    assert cs.c2 == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    c0, c1 = reconstruct_from_C2(cs.c2, 2)
    assert c0 == {(0, 0)}
    assert c1 == {(0, 1), (0, -1), (1, 0), (-1, 0)}


def test_four_completion_rule():
    regions = {(1, a, b, -1, 1, 1) for a, b in product((1, -1), repeat=2)}
    c0, c1 = reconstruct_from_C2(regions, 6)
    assert c0 == {(1, 0, 0, -1, 1, 1)}
    assert (1, 1, 0, -1, 1, 1) in c1 and len(c1) == 4
    c0, _ = reconstruct_from_C2(set(list(regions)[:3]), 6)
    assert c0 == frozenset()


def test_reconstruct_validation():
    with pytest.raises(ValueError):
        reconstruct_from_C2({(1, 0)}, 2)
    with pytest.raises(ValueError):
        reconstruct_from_C2({(1, 1, 1)}, 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_reconstruct_matches_geometry(n, seed):
    cs = enumerate_covectors(random_arrangement(random.Random(seed), n))
    c0, c1 = reconstruct_from_C2(cs.c2, n)
    assert c0 == cs.c0 and c1 == cs.c1
    assert c1_by_adjacency(cs.c2) == cs.c1


def test_mat_of():
    S = mat_of({(1, -1), (-1, 1), (0, 1)})
    assert S.rows == ((-1, 1), (0, 1), (1, -1))
    order = [(0, 1), (1, -1), (-1, 1)]
    assert mat_of(set(order), order).rows == tuple(order)
    with pytest.raises(ValueError):
        mat_of({(1, 1)}, [(1, -1)])
    with pytest.raises(ValueError):
        mat_of([])


def test_arrangement_matrix_shapes():
    assert build_matrix_lemma_main(CROSS).shape == (9, 3)
    assert build_matrix_lemma_main(CROSS, include_zero_vector=True).shape == (9, 3)  # lines meet: 0 is a point covector
    tri = Arrangement((Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -1)))
    assert build_matrix_lemma_main(tri).shape == (19, 4)
    assert build_matrix_lemma_main(tri, include_zero_vector=True).shape == (20, 4)
    assert build_matrix_lemma_main2(tri).shape == (7, 3)
    assert all(r[-1] == 1 for r in build_matrix_lemma_main(tri).rows)
    with pytest.raises(ValueError):
        build_matrix_lemma_main2(Arrangement((Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 0))))


def test_zero_row_blocks_realization():
    tri = Arrangement((Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -1)))
    S = build_matrix_lemma_main(tri, include_zero_vector=True)
    assert realization_from_arrangement(tri, S, augmented=True) is None


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.integers(0, 2**32 - 1), st.booleans())
def test_arrangement_matrix_witnesses(n, seed, uniform):
    arr = random_arrangement(random.Random(seed), n, uniform=uniform, bound=8)
    S = build_matrix_lemma_main(arr)
    R = realization_from_arrangement(arr, S, augmented=True)
    assert R is not None and verify_rank3_witness(S, R)
    if uniform:
        S2 = build_matrix_lemma_main2(arr)
        R2 = realization_from_arrangement(arr, S2, augmented=False)
        assert R2 is not None and verify_rank3_witness(S2, R2)


def test_explicit_rank3_witness():
    S = SignMatrix(((1, -1), (-1, 1)))
    good = PointLineRealization(((0, 0, 1), (2, 0, 1)), ((-1, 1), (0, 0), (1, -1)))
    assert verify_rank3_witness(S, good)
    bad = PointLineRealization(((0, 0, 1), (2, 0, 1)), ((1, 1), (0, 0), (1, -1)))
    assert not verify_rank3_witness(S, bad)
    with pytest.raises(ValueError):
        verify_rank3_witness(SignMatrix(((1,),)), good)
    with pytest.raises(ValueError):
        PointLineRealization(((0, 0, 2),), ((1,), (0,), (0,)))
    with pytest.raises(ValueError):
        PointLineRealization(((0, 0, 1),), ((0,), (0,), (1,)))


def affine_image(arr, M, t):
    # p -> M p + t maps line (a, b).p + c = 0 to (a, b) M^-1 q + c - (a, b) M^-1 t = 0
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    inv = ((M[1][1] / det, -M[0][1] / det), (-M[1][0] / det, M[0][0] / det))
    out = []
    for l in arr.lines:
        a = l.a * inv[0][0] + l.b * inv[1][0]
        b = l.a * inv[0][1] + l.b * inv[1][1]
        out.append(Line(a, b, l.c - a * t[0] - b * t[1], l.orient))
    return Arrangement(tuple(out))


def test_affine_maps_preserve_covectors():
    rng = random.Random(11)
    for n in range(2, 6):
        arr = random_arrangement(rng, n)
        M = ((Fraction(2), Fraction(1)), (Fraction(-1), Fraction(3, 2)))
        img = affine_image(arr, M, (Fraction(5), Fraction(-7, 3)))
        a, b = enumerate_covectors(arr), enumerate_covectors(img)
        assert compare_c2(a.c2, b.c2)
        assert (a.c0, a.c1) == (b.c0, b.c1)
        A = tuple(i for i in range(n) if rng.random() < 0.5)
        assert compare_c2(a.c2, reorient(b.c2, A), up_to_reorientation=True) is not None


def test_oriented_matroid_includes_zero():
    om = OrientedMatroidCovectors.of_arrangement(CROSS)
    assert (0, 0) in om.covectors and len(om.covectors) == 9
    with pytest.raises(ValueError):
        OrientedMatroidCovectors(2, frozenset({(1,)}))


def test_covector_file_roundtrip():
    cov = enumerate_covectors(CROSS).c2
    text = serialize_covectors(2, cov)
    assert text.startswith("n=2\n")
    assert parse_covectors(text) == (2, cov)
    for bad in ("++\n", "n=2\n+\n", "n=x\n", "n=0\n"):
        with pytest.raises(SignFormatError):
            parse_covectors(bad)
