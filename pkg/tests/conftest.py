import random

import pytest
from hypothesis import strategies as st

from signrank.signs import SignMatrix


def sign_matrices(min_m=1, max_m=4, min_n=1, max_n=4, strict=False):
    alphabet = st.sampled_from((1, -1)) if strict else st.sampled_from((1, -1, 0))

    @st.composite
    def build(draw):
        m = draw(st.integers(min_m, max_m))
        n = draw(st.integers(min_n, max_n))
        rows = draw(st.lists(st.lists(alphabet, min_size=n, max_size=n), min_size=m, max_size=m))
        return SignMatrix(tuple(map(tuple, rows)))

    return build()


def threshold_matrix(rng: random.Random, m: int, n: int, levels: int = 6, flip: bool = True) -> SignMatrix:
    """Strict matrix whose columns are zero-free vectors of span{1, y} (times row flips)."""
    y = [rng.randint(0, levels - 1) for _ in range(m)]
    d = [rng.choice((1, -1)) if flip else 1 for _ in range(m)]
    cols = []
    for _ in range(n):
        t = rng.randint(-1, levels - 1) + 0.5
        s = rng.choice((1, -1))
        cols.append([di * s * (1 if yi > t else -1) for di, yi in zip(d, y)])
    return SignMatrix.from_columns(cols)


@pytest.fixture
def rng():
    return random.Random(12345)
