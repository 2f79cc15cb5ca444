"""Covector-level operations on oriented matroids of line arrangements.

Includes reorientation and isomorphism search, recovery of the vertex and
edge covectors of a uniform arrangement from its region covectors, the
``Mat(.)`` sign matrices built from covector sets, and exact checking of
rank-3 point/line factorizations ``A = P @ L``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .geometry import Arrangement, CovectorSet, enumerate_covectors, is_uniform
from .rational import RationalMatrix, matmul, rational_rank
from .signs import SignMatrix, SignVector, sign_of, vector_from_text, vector_to_text, SignFormatError

__all__ = [
    "OrientedMatroidCovectors", "PointLineRealization", "reorient", "find_reorientation",
    "reconstruct_from_C2", "c1_by_adjacency", "compare_c2", "mat_of", "build_matrix_lemma_main",
    "build_matrix_lemma_main2", "realization_from_arrangement", "verify_rank3_witness",
    "rational_rank", "parse_covectors", "serialize_covectors",
]


@dataclass(frozen=True)
class OrientedMatroidCovectors:
    ground_size: int
    covectors: FrozenSet[SignVector]

    def __post_init__(self):
        cov = frozenset(tuple(v) for v in self.covectors) | {(0,) * self.ground_size}
        if any(len(v) != self.ground_size for v in cov):
            raise ValueError("covector length differs from the ground size")
        object.__setattr__(self, "covectors", cov)

    @classmethod
    def of_arrangement(cls, arr: Arrangement) -> "OrientedMatroidCovectors":
        return cls(arr.n, enumerate_covectors(arr).all())


@dataclass(frozen=True)
class PointLineRealization:
    """``P`` is m x 3 with rows ``(x_i, y_i, 1)``; ``L`` is 3 x n with columns ``(a_j, b_j, c_j)``."""

    P: Tuple[Tuple[Fraction, ...], ...]
    L: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        P = tuple(tuple(Fraction(x) for x in row) for row in self.P)
        L = tuple(tuple(Fraction(x) for x in row) for row in self.L)
        if any(len(row) != 3 for row in P):
            raise ValueError("P must have three columns")
        if any(row[2] != 1 for row in P):
            raise ValueError("third column of P must be all ones")
        if len(L) != 3 or len({len(r) for r in L}) != 1:
            raise ValueError("L must have three rows of equal length")
        for j in range(len(L[0])):
            if L[0][j] == 0 and L[1][j] == 0:
                raise ValueError(f"column {j} of L has (a, b) = (0, 0)")
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "L", L)

    def product(self) -> RationalMatrix:
        return matmul(self.P, self.L)


def reorient(cov: Iterable[SignVector], A: Iterable[int]) -> FrozenSet[SignVector]:
    A = frozenset(A)
    return frozenset(tuple(-s if i in A else s for i, s in enumerate(v)) for v in cov)


def _support(v: SignVector) -> FrozenSet[int]:
    return frozenset(i for i, s in enumerate(v) if s)


def find_reorientation(L1: Iterable[SignVector], L2: Iterable[SignVector]) -> Optional[Tuple[int, ...]]:
    """Lexicographically least ``A`` (sorted tuple) with ``reorient(L1, A) == L2``."""
    L1, L2 = frozenset(L1), frozenset(L2)
    if len(L1) != len(L2):
        return None
    if not L1:
        return ()
    n = len(next(iter(L1)))
    if any(len(v) != n for v in L1 | L2):
        raise ValueError("covector sets over different ground sizes")
    if Counter(map(_support, L1)) != Counter(map(_support, L2)):
        return None
    v = max(sorted(L1), key=lambda u: len(_support(u)))
    supp = _support(v)
    free = [i for i in range(n) if i not in supp]
    found = []
    for w in sorted(L2):
        if _support(w) != supp:
            continue
        base = [i for i in supp if v[i] != w[i]]
        for bits in product((False, True), repeat=len(free)):
            A = tuple(sorted(base + [i for i, b in zip(free, bits) if b]))
            if reorient(L1, A) == L2:
                found.append(A)
    return min(found) if found else None


def compare_c2(c2a: Iterable[SignVector], c2b: Iterable[SignVector], up_to_reorientation: bool = False):
    """Direct equality, or (``up_to_reorientation``) the reorientation found, else None/False."""
    if not up_to_reorientation:
        return frozenset(c2a) == frozenset(c2b)
    return find_reorientation(c2a, c2b)


def reconstruct_from_C2(C2: Iterable[SignVector], n: int) -> Tuple[FrozenSet[SignVector], FrozenSet[SignVector]]:
    """Vertex and edge covectors of a uniform arrangement from its regions.

    A vertex covector has zeros at ``i < j`` and all four sign fillings of
    ``{i, j}`` are region covectors. Edge covectors come from vertex
    covectors by filling one of the two zeros. Needs ``n >= 2``; a single
    line has no vertices.
    """
    C2 = frozenset(C2)
    for v in C2:
        if len(v) != n or not all(v):
            raise ValueError(f"{vector_to_text(v)} is not a full-support sign vector of length {n}")
    c0 = set()
    for v in C2:
        for i, j in combinations(range(n), 2):
            s = list(v)
            ok = True
            for si, sj in product((1, -1), repeat=2):
                s[i], s[j] = si, sj
                if tuple(s) not in C2:
                    ok = False
                    break
            if ok:
                s[i] = s[j] = 0
                c0.add(tuple(s))
    c1 = set()
    for v in c0:
        for i in (k for k, s in enumerate(v) if s == 0):
            for fill in (1, -1):
                s = list(v)
                s[i] = fill
                c1.add(tuple(s))
    return frozenset(c0), frozenset(c1)


def c1_by_adjacency(C2: Iterable[SignVector]) -> FrozenSet[SignVector]:
    """Edges from pairs of regions differing in exactly one position."""
    C2 = frozenset(C2)
    out = set()
    for v in C2:
        for i in range(len(v)):
            w = v[:i] + (-v[i],) + v[i + 1:]
            if w in C2:
                out.add(v[:i] + (0,) + v[i + 1:])
    return frozenset(out)


def mat_of(cov: Iterable[SignVector], order: Optional[Sequence[SignVector]] = None) -> SignMatrix:
    """Rows are the covectors, in ``order`` or else lexicographically (- < 0 < +)."""
    cov = list(cov)
    if not cov:
        raise ValueError("Mat of an empty covector set")
    if order is None:
        rows = sorted(set(cov))
    else:
        if set(order) != set(cov):
            raise ValueError("order must list exactly the given covectors")
        rows = list(order)
    return SignMatrix(tuple(rows))


def _lemma_main_rows(cs: CovectorSet, include_zero_vector: bool) -> List[SignVector]:
    cov = cs.all() if include_zero_vector else cs.point_covectors()
    return sorted(cov)


def build_matrix_lemma_main(arr: Arrangement, include_zero_vector: bool = False) -> SignMatrix:
    """``Mat`` of the point covectors of ``arr`` with an all-``+`` column appended.

    With ``include_zero_vector`` the all-zero covector is added as a row
    ``(0, ..., 0, +)`` even when no point lies on every line; such a
    matrix has no rank-3 point/line realization unless all lines meet.
    """
    cs = enumerate_covectors(arr)
    rows = _lemma_main_rows(cs, include_zero_vector)
    return SignMatrix(tuple(r + (1,) for r in rows))


def build_matrix_lemma_main2(arr: Arrangement) -> SignMatrix:
    if not is_uniform(arr):
        raise ValueError("build_matrix_lemma_main2 needs a uniform arrangement")
    return mat_of(enumerate_covectors(arr).c2)


def realization_from_arrangement(arr: Arrangement, S: SignMatrix, augmented: bool) -> Optional[PointLineRealization]:
    """Point/line factorization of ``S`` read off the arrangement itself.

    Row ``i`` of ``S`` must be a covector of ``arr`` (plus a trailing ``+``
    when ``augmented``); its sample point becomes row ``(x, y, 1)`` of ``P``.
    The appended all-``+`` column is a horizontal line below every sample point.
    Returns None when some row has no sample point.
    """
    cs = enumerate_covectors(arr)
    P = []
    for row in S.rows:
        cv = row[:-1] if augmented else row
        p = cs.samples.get(cv)
        if p is None:
            return None
        P.append((p.x, p.y, Fraction(1)))
    cols = [l.coefficients() for l in arr.lines]
    if augmented:
        cols.append((Fraction(0), Fraction(1), 1 - min(p[1] for p in P)))
    L = tuple(tuple(col[k] for col in cols) for k in range(3))
    return PointLineRealization(tuple(P), L)


def verify_rank3_witness(S: SignMatrix, R: PointLineRealization) -> bool:
    if len(R.P) != S.m or len(R.L[0]) != S.n:
        raise ValueError(f"realization of shape {len(R.P)}x{len(R.L[0])} does not fit a {S.m}x{S.n} matrix")
    A = R.product()
    for i in range(S.m):
        for j in range(S.n):
            if sign_of(A[i][j]) != S.rows[i][j]:
                return False
    return rational_rank(A) <= 3


def parse_covectors(text: str) -> Tuple[int, FrozenSet[SignVector]]:
    """Covector file: header ``n=<int>`` then one sign vector per line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise SignFormatError("covector file must start with a header line 'n=<int>'")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise SignFormatError(f"bad header {lines[0]!r}") from None
    if n < 1:
        raise SignFormatError("n must be positive")
    out = set()
    for k, ln in enumerate(lines[1:], 2):
        v = vector_from_text(ln)
        if len(v) != n:
            raise SignFormatError(f"line {k}: expected {n} signs, got {len(v)}")
        out.add(v)
    return n, frozenset(out)


def serialize_covectors(n: int, cov: Iterable[SignVector]) -> str:
    return f"n={n}\n" + "".join(vector_to_text(v) + "\n" for v in sorted(cov))
