"""Reduce a generalized sign matrix to a strict one with the same minrank.

The rewriting either produces a strict matrix ``S'`` with
``minrank(S') = minrank(S)`` or certifies ``minrank(S) > 2``:

1. drop all-zero rows and columns;
2. pick a column with zeros; its zero rows ``K`` come first and the
   other rows are flipped so the column reads ``0..0 +..+``;
3. a column that is nonzero in the first row of ``K`` must be nonzero on
   all of ``K``; rows of ``K`` are flipped so it is ``+`` there;
4. a column with two or more zeros at ``U`` needs ``U == K`` or
   ``U`` disjoint from ``K``, and identical rows on ``U``; all but one of
   those rows are deleted (then start over from step 2);
5. every column with exactly one zero is replaced by its two fillings.

Rows are never physically permuted; ``K`` is tracked as an index set.
The outcome keeps enough bookkeeping to lift a rank-2 witness of ``S'``
back to one of the original matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .chain import Rank2Witness, minrank_le2_strict, rank1_witness, verify_rank2_witness
from .signs import SignMatrix

STRICT = "strict"
GT2 = "minrank>2"
ZERO = "minrank=0"


@dataclass(frozen=True)
class TraceStep:
    step: int
    action: str
    rows: Tuple[int, ...] = ()
    cols: Tuple[int, ...] = ()

    def __str__(self):
        parts = [f"step {self.step}: {self.action}"]
        if self.rows:
            parts.append("rows " + ",".join(str(i) for i in self.rows))
        if self.cols:
            parts.append("cols " + ",".join(str(j) for j in self.cols))
        return "; ".join(parts)


@dataclass(frozen=True)
class ReductionOutcome:
    """Result of :func:`reduce_generalized`.

    ``kind`` is one of ``STRICT``, ``GT2``, ``ZERO``. Row and column
    numbers in the trace refer to the original matrix.
    """

    kind: str
    source: SignMatrix
    matrix: Optional[SignMatrix] = None
    trace: Tuple[TraceStep, ...] = ()
    failing_step: Optional[int] = None
    witness_rows: Tuple[int, ...] = ()
    witness_cols: Tuple[int, ...] = ()
    # bookkeeping for lifting witnesses, all in original indices
    row_ids: Tuple[int, ...] = ()
    flips: Dict[int, int] = field(default_factory=dict)
    duplicates: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    col_sources: Tuple[Tuple[int, Optional[int], int], ...] = ()

    @property
    def is_strict(self) -> bool:
        return self.kind == STRICT


class _Work:
    """Mutable state of one reduction run."""

    def __init__(self, S: SignMatrix):
        self.S = S
        self.rows: List[int] = []
        self.cols: List[int] = []
        self.flip: Dict[int, int] = {i: 1 for i in range(S.m)}
        self.dups: Dict[int, Tuple[int, int]] = {}
        self.trace: List[TraceStep] = []

    def entry(self, r: int, c: int) -> int:
        return self.flip[r] * self.S.rows[r][c]

    def col(self, c: int) -> List[int]:
        return [self.entry(r, c) for r in self.rows]

    def zero_rows(self, c: int) -> List[int]:
        return [r for r in self.rows if self.S.rows[r][c] == 0]

    def do_flip(self, rows: List[int], step: int, why: str):
        if rows:
            for r in rows:
                self.flip[r] = -self.flip[r]
            self.trace.append(TraceStep(step, why, tuple(rows)))

    def fail(self, step: int, why: str, rows=(), cols=()) -> ReductionOutcome:
        self.trace.append(TraceStep(step, "declare minrank > 2: " + why, tuple(rows), tuple(cols)))
        return ReductionOutcome(
            GT2, self.S, trace=tuple(self.trace), failing_step=step,
            witness_rows=tuple(rows), witness_cols=tuple(cols),
        )


def reduce_generalized(S: SignMatrix) -> ReductionOutcome:
    w = _Work(S)

    # Step 1
    w.rows = [i for i, r in enumerate(S.rows) if any(r)]
    w.cols = [j for j in range(S.n) if any(S.rows[i][j] for i in range(S.m))]
    dropped_r = tuple(i for i in range(S.m) if i not in set(w.rows))
    dropped_c = tuple(j for j in range(S.n) if j not in set(w.cols))
    if dropped_r or dropped_c:
        w.trace.append(TraceStep(1, "remove all-zero rows/columns", dropped_r, dropped_c))
    if not w.rows:
        return ReductionOutcome(ZERO, S, trace=tuple(w.trace))

    while True:
        zero_cols = [c for c in w.cols if any(S.rows[r][c] == 0 for r in w.rows)]
        if not zero_cols:
            break

        # Step 2
        pivot = zero_cols[0]
        K = [r for r in w.rows if S.rows[r][pivot] == 0]
        Kset = set(K)
        w.trace.append(TraceStep(2, f"pivot column has {len(K)} zeros", tuple(K), (pivot,)))
        w.do_flip([r for r in w.rows if r not in Kset and w.entry(r, pivot) < 0], 2,
                  "flip rows so the pivot column is + off its zeros")

        # Step 3
        first = K[0]
        other = next(c for c in w.cols if S.rows[first][c] != 0)
        bad = [r for r in K if S.rows[r][other] == 0]
        if bad:
            return w.fail(3, "column nonzero in the first zero row vanishes elsewhere on it", bad, (pivot, other))
        w.do_flip([r for r in K if w.entry(r, other) < 0], 3, "flip zero rows of the pivot so the second column is +")

        # Step 4
        multi = next((c for c in w.cols if sum(S.rows[r][c] == 0 for r in w.rows) >= 2), None)
        if multi is None:
            break
        U = [r for r in w.rows if S.rows[r][multi] == 0]
        if set(U) != Kset and Kset & set(U):
            return w.fail(4, "zero set meets the pivot zeros without equalling them", U, (pivot, multi))
        keep = U[0]
        ref = [w.entry(keep, c) for c in w.cols]
        for r in U[1:]:
            if [w.entry(r, c) for c in w.cols] != ref:
                return w.fail(4, "rows on a common zero set differ", (keep, r), (multi,))
        for r in U[1:]:
            w.dups[r] = (keep, w.flip[r] * w.flip[keep])
        dead = set(U[1:])
        w.rows = [r for r in w.rows if r not in dead]
        w.trace.append(TraceStep(4, f"delete duplicate rows, keeping row {keep}", tuple(U[1:]), (multi,)))

    # Step 5
    sources: List[Tuple[int, Optional[int], int]] = []
    split = []
    for c in w.cols:
        zs = [r for r in w.rows if S.rows[r][c] == 0]
        if not zs:
            sources.append((c, None, 0))
        else:
            assert len(zs) == 1
            sources.append((c, zs[0], 1))
            sources.append((c, zs[0], -1))
            split.append(c)
    if split:
        w.trace.append(TraceStep(5, "split single-zero columns into + and - fillings", (), tuple(split)))

    rows = []
    for r in w.rows:
        row = []
        for c, zr, fill in sources:
            row.append(fill if zr == r else w.entry(r, c))
        rows.append(tuple(row))
    out = SignMatrix(tuple(rows))
    assert out.strict
    return ReductionOutcome(
        STRICT, S, matrix=out, trace=tuple(w.trace), row_ids=tuple(w.rows),
        flips={r: w.flip[r] for r in w.rows}, duplicates=dict(w.dups), col_sources=tuple(sources),
    )


def lift_witness(outcome: ReductionOutcome, W: Rank2Witness) -> Rank2Witness:
    """Turn a witness for ``outcome.matrix`` into one for ``outcome.source``."""
    if not outcome.is_strict:
        raise ValueError("only strict outcomes carry a reduced matrix")
    S = outcome.source
    pos = {r: i for i, r in enumerate(outcome.row_ids)}

    # undo the splits: a convex combination of the two fillings that vanishes at the zero row
    combos: Dict[int, Tuple[Fraction, Fraction]] = {}
    pending: Dict[int, Dict[int, Tuple[Fraction, Fraction]]] = {}
    for j, (c, zr, fill) in enumerate(outcome.col_sources):
        if zr is None:
            combos[c] = W.column_combos[j]
        else:
            pending.setdefault(c, {})[fill] = W.column_combos[j]
    for c, both in pending.items():
        zr = next(z for cc, z, _ in outcome.col_sources if cc == c)
        i = pos[zr]
        (ap, bp), (an, bn) = both[1], both[-1]
        vp = ap * W.X[i] + bp * W.Y[i]
        vn = an * W.X[i] + bn * W.Y[i]
        t = vp / (vp - vn)
        combos[c] = ((1 - t) * ap + t * an, (1 - t) * bp + t * bn)

    X = [Fraction(0)] * S.m
    Y = [Fraction(0)] * S.m
    for r, i in pos.items():
        f = outcome.flips[r]
        X[r], Y[r] = f * W.X[i], f * W.Y[i]

    def resolve(r):
        if r in pos:
            return X[r], Y[r]
        keep, rel = outcome.duplicates[r]
        x, y = resolve(keep)
        return rel * x, rel * y

    for r in outcome.duplicates:
        X[r], Y[r] = resolve(r)

    zero = (Fraction(0), Fraction(0))
    lifted = Rank2Witness(tuple(X), tuple(Y), tuple(combos.get(c, zero) for c in range(S.n)))
    if not verify_rank2_witness(S, lifted):
        raise AssertionError("internal error: lifted witness does not realize the source matrix")
    return lifted


@dataclass(frozen=True)
class Minrank2Result:
    ok: bool
    outcome: ReductionOutcome
    witness: Optional[Rank2Witness] = None
    strict_witness: Optional[Rank2Witness] = None

    def __bool__(self):
        return self.ok


def minrank_le2(S: SignMatrix) -> Minrank2Result:
    """Decide minrank(S) <= 2 for a generalized sign matrix.

    On success ``witness`` realizes ``S`` itself; ``strict_witness``
    realizes the reduced strict matrix.
    """
    outcome = reduce_generalized(S)
    if outcome.kind == ZERO:
        zero = Fraction(0)
        W = Rank2Witness((zero,) * S.m, (zero,) * S.m, ((zero, zero),) * S.n)
        return Minrank2Result(True, outcome, W)
    if outcome.kind == GT2:
        return Minrank2Result(False, outcome)
    sw = minrank_le2_strict(outcome.matrix)
    if sw is None:
        return Minrank2Result(False, outcome)
    w1 = rank1_witness(S)
    W = w1 if w1 is not None else lift_witness(outcome, sw)
    return Minrank2Result(True, outcome, W, sw)

