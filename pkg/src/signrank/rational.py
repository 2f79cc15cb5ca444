"""Exact rational matrices: parsing, products, rank and null spaces.

Rank uses Bareiss' fraction-free elimination on an integer copy of the
matrix (each row scaled by the lcm of its denominators), so intermediate
values stay integral and no gcd work is done per step.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence

RationalMatrix = List[List[Fraction]]


def parse_rational(token: str) -> Fraction:
    token = token.strip()
    if not token:
        raise ValueError("empty rational")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational {token!r}") from None


def format_rational(x: Fraction) -> str:
    # str(Fraction) already gives "p/q", or "p" when q == 1
    return str(Fraction(x))


def parse_rational_matrix(text: str) -> RationalMatrix:
    """Whitespace separated ``p/q`` entries, one matrix row per line."""
    rows = [[parse_rational(tok) for tok in line.split()] for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty rational matrix")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged rational matrix")
    return rows


def format_rational_matrix(A: Sequence[Sequence[Fraction]]) -> str:
    return "".join(" ".join(format_rational(x) for x in row) + "\n" for row in A)


def to_fractions(A: Sequence[Sequence]) -> RationalMatrix:
    return [[Fraction(x) for x in row] for row in A]


def matmul(A: Sequence[Sequence[Fraction]], B: Sequence[Sequence[Fraction]]) -> RationalMatrix:
    if not A or not B:
        raise ValueError("empty matrix in product")
    inner = len(B)
    if any(len(row) != inner for row in A):
        raise ValueError(f"dimension mismatch: {len(A[0])} columns vs {inner} rows")
    cols = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in A]


def _integer_rows(A: Sequence[Sequence]) -> List[List[int]]:
    out = []
    for row in A:
        row = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def rational_rank(A: Sequence[Sequence]) -> int:
    """Exact rank over Q via Bareiss elimination."""
    M = _integer_rows(A)
    if not M or not M[0]:
        return 0
    m, n = len(M), len(M[0])
    rank = 0
    prev = 1
    for c in range(n):
        if rank == m:
            break
        pivot = next((r for r in range(rank, m) if M[r][c] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank][c]
        for r in range(rank + 1, m):
            f = M[r][c]
            row_r, row_p = M[r], M[rank]
            for k in range(c + 1, n):
                # exact division is the Bareiss invariant
                row_r[k] = (p * row_r[k] - f * row_p[k]) // prev
            row_r[c] = 0
        prev = p
        rank += 1
    return rank


def rref(A: Sequence[Sequence]) -> tuple[RationalMatrix, List[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    M = to_fractions(A)
    m = len(M)
    n = len(M[0]) if M else 0
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def nullspace(A: Sequence[Sequence], ncols: int | None = None) -> RationalMatrix:
    """Basis (list of vectors) of the right null space of ``A``.

    ``ncols`` is needed when ``A`` has no rows.
    """
    if not A:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(A)
    n = len(R[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis
