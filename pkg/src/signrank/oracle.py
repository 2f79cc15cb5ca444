"""Brute-force ground truth for the rank-2 deciders, and counting tools.

Minrank <= 2 oracle
-------------------
A subspace of dimension <= 2 realizing ``S`` gives every nonzero row ``i``
a vector ``p_i`` in the plane, with ``S_ij = sign(<p_i, q_j>)``. After a
rotation no ``p_i`` is vertical, so ``p_i`` is a positive multiple of
``d_i * (1, s_i)``: a row sign ``d_i`` and a slope ``s_i``. The sign
patterns available to the columns are then ``d * sign(alpha + beta * s)``,
which depend only on the weak order (ordered partition) of the slopes.
The oracle enumerates every ordered partition of the rows, and for
generalized input every row-sign vector ``d`` as well; strict input fixes
``d`` from the first column. Rank <= 1 is the one-block partition, and
all-zero rows are dropped first since their coordinate is identically 0.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .chain import rank1_factors
from .rational import RationalMatrix, matmul, nullspace, rational_rank
from .signs import SignMatrix, SignVector, sign_of

DEFAULT_ROW_LIMIT = 7

OrderedPartition = Tuple[FrozenSet[int], ...]


class OracleLimitError(ValueError):
    """The matrix has more rows than the oracle is configured to handle."""


def ordered_partitions(m: int) -> Iterator[Tuple[int, ...]]:
    """Every weak order of ``range(m)``, as a tuple of block levels ``0..k-1``.

    Each ordered partition is produced once: element ``i`` either joins one
    of the existing blocks or opens a new block at any position.
    """

    def rec(i: int, levels: Tuple[int, ...], k: int):
        if i == m:
            yield levels
            return
        for b in range(k):
            yield from rec(i + 1, levels + (b,), k)
        for p in range(k + 1):
            shifted = tuple(lv + 1 if lv >= p else lv for lv in levels)
            yield from rec(i + 1, shifted + (p,), k + 1)

    yield from rec(0, (), 0)


def as_blocks(levels: Sequence[int]) -> OrderedPartition:
    k = max(levels) + 1 if levels else 0
    return tuple(frozenset(i for i, lv in enumerate(levels) if lv == b) for b in range(k))


def threshold_patterns(levels: Sequence[int], allow_zero: bool) -> FrozenSet[SignVector]:
    """Sign patterns of ``alpha + beta * s`` where ``s`` has the given weak order."""
    m = len(levels)
    k = max(levels) + 1 if m else 0
    pats = {(1,) * m, (-1,) * m}
    if allow_zero:
        pats.add((0,) * m)
    for p in range(1, k):
        v = tuple(1 if lv >= p else -1 for lv in levels)
        pats.add(v)
        pats.add(tuple(-x for x in v))
    if allow_zero:
        for p in range(k):
            v = tuple((lv > p) - (lv < p) for lv in levels)
            pats.add(v)
            pats.add(tuple(-x for x in v))
    return frozenset(pats)


def _code3(v: Sequence[int]) -> int:
    c = 0
    for s in reversed(v):
        c = 3 * c + (s + 1)
    return c


def _code2(v: Sequence[int]) -> int:
    c = 0
    for s in reversed(v):
        c = 2 * c + (s < 0)
    return c


@lru_cache(maxsize=None)
def _strict_masks(m: int) -> Tuple[int, ...]:
    masks = set()
    for lv in ordered_partitions(m):
        mask = 0
        for v in threshold_patterns(lv, False):
            mask |= 1 << _code2(v)
        masks.add(mask)
    return tuple(sorted(masks))


@lru_cache(maxsize=None)
def _general_masks(m: int) -> Tuple[int, ...]:
    masks = set()
    for lv in ordered_partitions(m):
        mask = 0
        for v in threshold_patterns(lv, True):
            mask |= 1 << _code3(v)
        masks.add(mask)
    return tuple(sorted(masks))


def minrank2_oracle(S: SignMatrix, allow_zero: bool = True, limit: int = DEFAULT_ROW_LIMIT) -> bool:
    """True iff some subspace of dimension <= 2 realizes ``S``."""
    if S.m > limit:
        raise OracleLimitError(f"oracle handles at most {limit} rows, matrix has {S.m}")
    if not S.strict and not allow_zero:
        raise ValueError("matrix has zero entries; pass allow_zero=True")

    if S.strict:
        flips = [r[0] for r in S.rows]
        need = 0
        for c in S.columns():
            need |= 1 << _code2([f * s for f, s in zip(flips, c)])
        return any(need & ~mask == 0 for mask in _strict_masks(S.m))

    rows = [r for r in S.rows if any(r)]
    if not rows:
        return True
    m = len(rows)
    cols = list(zip(*rows))
    masks = _general_masks(m)
    for tail in product((1, -1), repeat=m - 1):
        d = (1,) + tail
        need = 0
        for c in cols:
            need |= 1 << _code3([f * s for f, s in zip(d, c)])
        if any(need & ~mask == 0 for mask in masks):
            return True
    return False


def subspace_patterns(Y: Sequence, m: Optional[int] = None) -> FrozenSet[SignVector]:
    """Zero-free sign patterns of vectors in ``span{(1, ..., 1), Y}``."""
    Y = [Fraction(y) for y in Y]
    if m is not None and len(Y) != m:
        raise ValueError(f"Y has {len(Y)} entries, expected {m}")
    vals = sorted(set(Y))
    cuts = [vals[0] - 1] + [(a + b) / 2 for a, b in zip(vals, vals[1:])] + [vals[-1] + 1]
    out = set()
    for t in cuts:
        v = tuple(sign_of(y - t) for y in Y)
        out.add(v)
        out.add(tuple(-s for s in v))
    return frozenset(out)


def sauer_shelah_bound(m: int, d: int) -> int:
    """``2 * sum_{i<d} C(m-1, i)``: zero-free patterns in a d-dim subspace of R^m."""
    if not 1 <= d <= m:
        raise ValueError(f"need 1 <= d <= m, got m={m}, d={d}")
    return 2 * sum(comb(m - 1, i) for i in range(d))


# ---------------------------------------------------------------------------
# one-sided search for low-rank realizations


def _verified(S: SignMatrix, A: RationalMatrix, r: int) -> bool:
    for i in range(S.m):
        for j in range(S.n):
            if sign_of(A[i][j]) != S.rows[i][j]:
                return False
    return rational_rank(A) <= r


def random_substitution(S: SignMatrix, rng: random.Random, bound: int = 10**6) -> RationalMatrix:
    """Random rational matrix with sign pattern ``S``."""
    return [
        [Fraction(s * rng.randint(1, bound), rng.randint(1, 1000)) if s else Fraction(0) for s in row]
        for row in S.rows
    ]


def _snap(x: np.ndarray, den: int) -> List[List[Fraction]]:
    return [[Fraction(int(round(v * den)), den) for v in row] for row in np.atleast_2d(x)]


def _fit_columns(S: SignMatrix, U: List[List[Fraction]], V: np.ndarray, den: int) -> Optional[List[List[Fraction]]]:
    """Exact right factor close to ``V`` that vanishes exactly where ``S`` does."""
    r = len(U[0])
    cols = []
    for j in range(S.n):
        Z = [U[i] for i in range(S.m) if S.rows[i][j] == 0]
        N = nullspace(Z, ncols=r)
        if not N:
            cols.append([Fraction(0)] * r)
            continue
        Nf = np.array([[float(x) for x in v] for v in N]).T
        coef, *_ = np.linalg.lstsq(Nf, V[:, j], rcond=None)
        c = [Fraction(int(round(x * den)), den) for x in coef]
        cols.append([sum((ck * v[t] for ck, v in zip(c, N)), Fraction(0)) for t in range(r)])
    return [list(row) for row in zip(*cols)]


def _descend(S: np.ndarray, r: int, rng: np.random.Generator, iters: int):
    m, n = S.shape
    U = rng.standard_normal((m, r))
    V = rng.standard_normal((r, n))
    nz = S != 0
    lr, b1, b2 = 0.05, 0.9, 0.999
    mU = np.zeros_like(U); vU = np.zeros_like(U)
    mV = np.zeros_like(V); vV = np.zeros_like(V)
    for t in range(1, iters + 1):
        A = U @ V
        h = np.maximum(0.0, 1.0 - S * A)
        G = np.where(nz, -2.0 * S * h, 20.0 * A)
        if t % 50 == 0 and not h[nz].any() and np.abs(A[~nz]).max(initial=0.0) < 1e-9:
            break
        gU, gV = G @ V.T, U.T @ G
        mU = b1 * mU + (1 - b1) * gU; vU = b2 * vU + (1 - b2) * gU**2
        mV = b1 * mV + (1 - b1) * gV; vV = b2 * vV + (1 - b2) * gV**2
        U -= lr * (mU / (1 - b1**t)) / (np.sqrt(vU / (1 - b2**t)) + 1e-12)
        V -= lr * (mV / (1 - b1**t)) / (np.sqrt(vV / (1 - b2**t)) + 1e-12)
    return U, V


def heuristic_rank_upper_bound(S: SignMatrix, r: int, seed: int = 0, iters: int = 3000,
                               restarts: int = 8) -> Optional[RationalMatrix]:
    """Search for a rational ``A`` with ``sign(A) = S`` and ``rank(A) <= r``.

    Only exactly verified matrices are returned. ``None`` proves nothing.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    rnd = random.Random(seed)
    for _ in range(3):
        A = random_substitution(S, rnd)
        if _verified(S, A, r):
            return A

    f = rank1_factors(S)
    if f is not None:
        u, v = f
        A = [[Fraction(a * b) for b in v] for a in u]
        if _verified(S, A, r):
            return A
    if r == 1:
        return None

    Sf = np.array(S.rows, dtype=float)
    gen = np.random.default_rng(seed)
    for _ in range(restarts):
        U, V = _descend(Sf, r, gen, iters)
        for den in (10, 100, 1000, 10**5):
            Uq = _snap(U, den)
            Vq = _fit_columns(S, Uq, V, den)
            A = matmul(Uq, Vq)
            if _verified(S, A, r):
                return A
            Vq = _snap(V, den)
            Ut = _fit_columns(S.transpose(), [list(c) for c in zip(*Vq)], U.T, den)
            A = matmul([list(c) for c in zip(*Ut)], Vq)
            if _verified(S, A, r):
                return A
    return None
