"""Deciding minrank <= 2 of strict sign matrices through the 2-chain property.

A complement-closed family ``T`` of subsets of ``[m]`` with ``|T| = 2k``
has the 2-chain property when it splits into a strictly increasing chain
``A_1 = {} < A_2 < ... < A_{k+1} = [m]`` and the chain of complements.
After normalizing a strict matrix (first column all ``+``, complements of
all columns present), its minus-sets ``T(S)`` have the property exactly
when the matrix has minimum rank at most two.

Row indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .signs import SignMatrix, SignVector, complement, sign_of

Subset = FrozenSet[int]


@dataclass(frozen=True)
class SetSystem:
    ground_size: int
    members: FrozenSet[Subset]

    def __post_init__(self):
        members = frozenset(frozenset(a) for a in self.members)
        for a in members:
            if any(not 0 <= i < self.ground_size for i in a):
                raise ValueError(f"member {sorted(a)} not contained in [{self.ground_size}]")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, item):
        return frozenset(item) in self.members


@dataclass(frozen=True)
class ChainWitness:
    chain: Tuple[Subset, ...]

    @property
    def k(self) -> int:
        return len(self.chain) - 1

    def complements(self, m: int) -> Tuple[Subset, ...]:
        full = frozenset(range(m))
        return tuple(full - a for a in self.chain)


@dataclass(frozen=True)
class ChainResult:
    """Outcome of :func:`has_two_chain`; truthy iff the property holds."""

    ok: bool
    witness: Optional[ChainWitness] = None
    reason: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Rank2Witness:
    """Vectors ``X``, ``Y`` and per-column coefficients ``(alpha_j, beta_j)``.

    Column ``j`` of the realized matrix is ``sign(alpha_j * X + beta_j * Y)``.
    ``X`` is the all-ones vector in the row frame where the first column is
    all ``+``; in the caller's frame it carries the row flips.
    """

    X: Tuple[Fraction, ...]
    Y: Tuple[Fraction, ...]
    column_combos: Tuple[Tuple[Fraction, Fraction], ...]

    def column(self, j: int) -> List[Fraction]:
        a, b = self.column_combos[j]
        return [a * x + b * y for x, y in zip(self.X, self.Y)]

    def realization(self) -> List[List[Fraction]]:
        """The rank <= 2 matrix ``[X Y] @ [alpha; beta]`` (rows x columns)."""
        cols = [self.column(j) for j in range(len(self.column_combos))]
        return [list(r) for r in zip(*cols)]


def t_minus(v: Sequence[int]) -> Subset:
    return frozenset(i for i, s in enumerate(v) if s < 0)


def build_set_system(S: SignMatrix) -> SetSystem:
    if not S.strict:
        raise ValueError("build_set_system needs a strict sign matrix")
    return SetSystem(S.m, frozenset(t_minus(c) for c in S.columns()))


def _chain_key(chain: Sequence[Subset]):
    return tuple(tuple(sorted(a)) for a in chain)


def has_two_chain(T: SetSystem) -> ChainResult:
    """Greedy 2-chain test.

    Grows ``A_i`` as the unique smallest remaining superset of ``A_{i-1}``.
    At the first step the two chains are interchangeable, so a tie between
    two smallest sets is allowed there (they are then ``A_2`` and the
    complement of ``A_k``). Of the two valid chains, the one with the
    lexicographically smaller sequence of sorted members is returned.
    """
    m = T.ground_size
    full = frozenset(range(m))
    empty: Subset = frozenset()
    members = T.members
    if empty not in members:
        return ChainResult(False, reason="empty set missing")
    if full not in members:
        return ChainResult(False, reason="ground set missing")
    if len(members) % 2:
        return ChainResult(False, reason="odd number of members")
    for a in members:
        if full - a not in members:
            return ChainResult(False, reason=f"complement of {sorted(a)} missing")
    k = len(members) // 2

    chain = [empty]
    remaining = set(members) - {empty}
    while len(chain) < k + 1:
        prev = chain[-1]
        supers = [a for a in remaining if prev < a]
        if not supers:
            return ChainResult(False, reason=f"no superset of {sorted(prev)} left")
        size = min(len(a) for a in supers)
        smallest = sorted((a for a in supers if len(a) == size), key=lambda a: sorted(a))
        if len(smallest) > 1 and len(chain) > 1:
            return ChainResult(
                False,
                reason=f"two minimum sets {sorted(smallest[0])} and {sorted(smallest[1])} extend {sorted(prev)}",
            )
        nxt = smallest[0]
        if nxt == full and len(chain) < k:
            return ChainResult(False, reason="reached the ground set with members left over")
        chain.append(nxt)
        remaining.discard(nxt)

    if chain[-1] != full:
        return ChainResult(False, reason="chain does not end at the ground set")
    covered = set(chain) | {full - a for a in chain}
    if covered != set(members):
        return ChainResult(False, reason="chain and complements do not cover the family")

    mirror = [full - a for a in reversed(chain)]
    best = min(chain, mirror, key=_chain_key)
    return ChainResult(True, witness=ChainWitness(tuple(best)))


def normalize_strict(S: SignMatrix) -> Tuple[Tuple[int, ...], List[SignVector]]:
    """Row flips making column 0 all ``+``, then the complement-closed,
    deduplicated column list of the flipped matrix."""
    flips = tuple(S.rows[i][0] for i in range(S.m))
    cols = []
    seen = set()
    for c in S.columns():
        c = tuple(f * s for f, s in zip(flips, c))
        for v in (c, complement(c)):
            if v not in seen:
                seen.add(v)
                cols.append(v)
    return flips, cols


def minrank_le2_strict(S: SignMatrix) -> Optional[Rank2Witness]:
    """Return a verified :class:`Rank2Witness` if minrank(S) <= 2, else None."""
    if not S.strict:
        raise ValueError("minrank_le2_strict needs a strict sign matrix; reduce generalized input first")
    if S.m == 1:
        w = Rank2Witness(
            (Fraction(1),), (Fraction(0),), tuple((Fraction(s), Fraction(0)) for s in S.rows[0])
        )
        assert verify_rank2_witness(S, w)
        return w

    flips, cols = normalize_strict(S)
    T = SetSystem(S.m, frozenset(t_minus(c) for c in cols))
    res = has_two_chain(T)
    if not res:
        return None
    chain = res.witness.chain

    # y_j = 1/i for j in A_i \ A_{i-1} (chain positions counted from 1)
    level = [0] * S.m
    for i in range(1, len(chain)):
        for j in chain[i] - chain[i - 1]:
            level[j] = i + 1
    Y0 = [Fraction(1, lv) for lv in level]
    position = {a: i + 1 for i, a in enumerate(chain)}
    full = frozenset(range(S.m))

    combos = []
    for c in S.columns():
        minus = t_minus(tuple(f * s for f, s in zip(flips, c)))
        if minus in position:
            combos.append((Fraction(1), -(position[minus] + Fraction(1, 2))))
        else:
            i = position[full - minus]
            combos.append((Fraction(-1), i + Fraction(1, 2)))

    X = tuple(Fraction(f) for f in flips)
    Y = tuple(f * y for f, y in zip(flips, Y0))
    w = Rank2Witness(X, Y, tuple(combos))
    if not verify_rank2_witness(S, w):
        raise AssertionError("internal error: constructed rank-2 witness does not verify")
    return w


def verify_rank2_witness(S: SignMatrix, W: Rank2Witness) -> bool:
    if len(W.X) != S.m or len(W.Y) != S.m or len(W.column_combos) != S.n:
        raise ValueError(
            f"witness shape ({len(W.X)}, {len(W.Y)}, {len(W.column_combos)}) does not fit a {S.m}x{S.n} matrix"
        )
    for j in range(S.n):
        a, b = W.column_combos[j]
        for i in range(S.m):
            if sign_of(a * W.X[i] + b * W.Y[i]) != S.rows[i][j]:
                return False
    return True


def _nonzero_part(S: SignMatrix) -> Tuple[List[int], List[int]]:
    rows = [i for i, r in enumerate(S.rows) if any(r)]
    cols = [j for j in range(S.n) if any(S.rows[i][j] for i in range(S.m))]
    return rows, cols


def rank1_factors(S: SignMatrix) -> Optional[Tuple[SignVector, SignVector]]:
    """Sign vectors ``u``, ``v`` with ``S = u v^T`` entrywise, if they exist."""
    rows, cols = _nonzero_part(S)
    u = [0] * S.m
    v = [0] * S.n
    if not rows:
        return tuple(u), tuple(v)
    first = [S.rows[rows[0]][j] for j in cols]
    if any(s == 0 for s in first):
        return None
    neg = [-s for s in first]
    for i in rows:
        r = [S.rows[i][j] for j in cols]
        if r == first:
            u[i] = 1
        elif r == neg:
            u[i] = -1
        else:
            return None
    for j, s in zip(cols, first):
        v[j] = s
    return tuple(u), tuple(v)


def minrank_le_r_small(S: SignMatrix, r: int) -> bool:
    if r == 0:
        return not any(any(row) for row in S.rows)
    if r == 1:
        return rank1_factors(S) is not None
    raise ValueError("minrank_le_r_small handles r in {0, 1}")


def rank1_witness(S: SignMatrix) -> Optional[Rank2Witness]:
    """A witness with ``Y = 0`` when minrank(S) <= 1."""
    f = rank1_factors(S)
    if f is None:
        return None
    u, v = f
    return Rank2Witness(
        tuple(Fraction(x) for x in u),
        tuple(Fraction(0) for _ in u),
        tuple((Fraction(x), Fraction(0)) for x in v),
    )


def iter_strict_matrices(m: int, n: int) -> Iterable[SignMatrix]:
    """All 2^(m*n) strict m x n matrices, in binary counting order."""
    for code in range(1 << (m * n)):
        rows = tuple(
            tuple(-1 if (code >> (i * n + j)) & 1 else 1 for j in range(n)) for i in range(m)
        )
        yield SignMatrix(rows)
