"""Affine line arrangements over the rationals and their covectors.

Every line ``aX + bY + c = 0`` carries an orientation flag; its ``+`` side
is where ``orient * (a x + b y + c) > 0``. Arrangements reject parallel
lines, so any two lines meet in exactly one point.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .rational import format_rational, parse_rational
from .signs import SignVector, sign_of


class ArrangementError(ValueError):
    pass


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))


@dataclass(frozen=True)
class Line:
    a: Fraction
    b: Fraction
    c: Fraction
    orient: int = 1

    def __post_init__(self):
        for name in "abc":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a == 0 and self.b == 0:
            raise ArrangementError("line needs (a, b) != (0, 0)")
        if self.orient not in (1, -1):
            raise ArrangementError(f"orientation must be +1 or -1, got {self.orient!r}")

    def raw(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c

    def value(self, p: Point) -> Fraction:
        """Oriented value; positive on the ``+`` side."""
        return self.orient * self.raw(p)

    def flipped(self) -> "Line":
        return Line(self.a, self.b, self.c, -self.orient)

    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction]:
        """Oriented coefficients ``orient * (a, b, c)``."""
        return self.orient * self.a, self.orient * self.b, self.orient * self.c


def _parallel(l1: Line, l2: Line) -> bool:
    return l1.a * l2.b - l1.b * l2.a == 0


@dataclass(frozen=True)
class Arrangement:
    lines: Tuple[Line, ...]

    def __post_init__(self):
        lines = tuple(self.lines)
        if not lines:
            raise ArrangementError("arrangement needs at least one line")
        for (i, l1), (j, l2) in combinations(enumerate(lines), 2):
            if _parallel(l1, l2):
                kind = "identical" if l1.a * l2.c == l2.a * l1.c and l1.b * l2.c == l2.b * l1.c else "parallel"
                raise ArrangementError(f"lines {i} and {j} are {kind}")
        object.__setattr__(self, "lines", lines)

    @property
    def n(self) -> int:
        return len(self.lines)

    def reoriented(self, A) -> "Arrangement":
        A = set(A)
        return Arrangement(tuple(l.flipped() if i in A else l for i, l in enumerate(self.lines)))


def intersection(l1: Line, l2: Line) -> Point:
    det = l1.a * l2.b - l1.b * l2.a
    if det == 0:
        raise ArrangementError("parallel lines do not meet")
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return Point(x, y)


def covector_at(arr: Arrangement, p: Point) -> SignVector:
    return tuple(sign_of(l.value(p)) for l in arr.lines)


def vertices(arr: Arrangement) -> List[Point]:
    """Distinct intersection points, in order of first appearance."""
    seen = {}
    for l1, l2 in combinations(arr.lines, 2):
        p = intersection(l1, l2)
        seen.setdefault(p, None)
    return list(seen)


def is_uniform(arr: Arrangement) -> bool:
    for p in vertices(arr):
        if sum(1 for l in arr.lines if l.raw(p) == 0) >= 3:
            return False
    return True


@dataclass(frozen=True)
class CovectorSet:
    """Covectors of the 0-, 1- and 2-cells, with one sample point each."""

    n: int
    c0: FrozenSet[SignVector]
    c1: FrozenSet[SignVector]
    c2: FrozenSet[SignVector]
    samples: Dict[SignVector, Point] = field(default_factory=dict, compare=False)

    @property
    def zero(self) -> SignVector:
        return (0,) * self.n

    def point_covectors(self) -> FrozenSet[SignVector]:
        return self.c0 | self.c1 | self.c2

    def all(self) -> FrozenSet[SignVector]:
        """The covector set including the all-zero vector."""
        return self.point_covectors() | {self.zero}

    def counts(self) -> Tuple[int, int, int]:
        return len(self.c0), len(self.c1), len(self.c2)


def _half(v: Tuple[Fraction, Fraction]) -> int:
    x, y = v
    return 0 if y > 0 or (y == 0 and x > 0) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -sign_of(cross)


def _sector_directions(lines: Sequence[Line]) -> List[Tuple[Fraction, Fraction]]:
    """One direction strictly inside each sector cut out by concurrent lines."""
    dirs = []
    for l in lines:
        dirs.append((-l.b, l.a))
        dirs.append((l.b, -l.a))
    dirs.sort(key=cmp_to_key(_angle_cmp))
    out = []
    for k in range(len(dirs)):
        u, v = dirs[k], dirs[(k + 1) % len(dirs)]
        w = (u[0] + v[0], u[1] + v[1])
        scale = max(abs(w[0]), abs(w[1]))
        out.append((w[0] / scale, w[1] / scale))
    return out


def _on_line_points(arr: Arrangement, idx: int) -> List[Point]:
    """A point inside every 1-cell carried by line ``idx``."""
    l = arr.lines[idx]
    p0 = Point(0, -l.c / l.b) if l.b != 0 else Point(-l.c / l.a, 0)
    dx, dy = -l.b, l.a
    ts = set()
    for j, other in enumerate(arr.lines):
        if j == idx:
            continue
        ts.add(-other.raw(p0) / (other.a * dx + other.b * dy))
    ts = sorted(ts)
    if not ts:
        params = [Fraction(0)]
    else:
        params = [ts[0] - 1] + [(s + t) / 2 for s, t in zip(ts, ts[1:])] + [ts[-1] + 1]
    return [Point(p0.x + t * dx, p0.y + t * dy) for t in params]


def enumerate_covectors(arr: Arrangement) -> CovectorSet:
    """Exact covector sets of the cell complex cut out by ``arr``."""
    samples: Dict[SignVector, Point] = {}
    c0, c1, c2 = set(), set(), set()

    def record(p: Point, bucket: set):
        cv = covector_at(arr, p)
        bucket.add(cv)
        samples.setdefault(cv, p)

    verts = vertices(arr)
    for v in verts:
        record(v, c0)
    for i in range(arr.n):
        for p in _on_line_points(arr, i):
            record(p, c1)

    if arr.n == 1:
        l = arr.lines[0]
        p0 = _on_line_points(arr, 0)[0]
        for s in (1, -1):
            record(Point(p0.x + s * l.a, p0.y + s * l.b), c2)
    for v in verts:
        through = [l for l in arr.lines if l.raw(v) == 0]
        others = [l for l in arr.lines if l.raw(v) != 0]
        if others:
            delta = min(abs(l.raw(v)) / (abs(l.a) + abs(l.b)) for l in others)
            eps = delta / 2
        else:
            eps = Fraction(1)
        for wx, wy in _sector_directions(through):
            record(Point(v.x + eps * wx, v.y + eps * wy), c2)

    cs = CovectorSet(arr.n, frozenset(c0), frozenset(c1), frozenset(c2), samples)
    for cv in cs.c1:
        assert sum(1 for s in cv if s == 0) == 1
    for cv in cs.c2:
        assert all(cv)
    return cs


def random_arrangement(rng: random.Random, n: int, *, uniform: bool = True, bound: int = 20,
                       random_orientation: bool = True, max_tries: int = 10000) -> Arrangement:
    """Random arrangement with integer coefficients in ``[-bound, bound]``."""
    for _ in range(max_tries):
        lines = []
        for _ in range(n):
            a, b = 0, 0
            while a == 0 and b == 0:
                a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
            c = rng.randint(-bound, bound)
            orient = rng.choice((1, -1)) if random_orientation else 1
            lines.append(Line(a, b, c, orient))
        try:
            arr = Arrangement(tuple(lines))
        except ArrangementError:
            continue
        if not uniform or is_uniform(arr):
            return arr
    raise RuntimeError(f"could not draw a {'uniform ' if uniform else ''}arrangement of {n} lines")


def parse_arrangement(text: str) -> Arrangement:
    """Read either the ``a b c orient`` line format or a JSON array.

    JSON records may be ``[a, b, c, orient]`` lists or objects with keys
    ``a, b, c, orient``; rationals are strings such as ``"-3/4"``.
    """
    stripped = text.strip()
    if not stripped:
        raise ArrangementError("empty arrangement")
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ArrangementError(f"bad JSON arrangement: {exc}") from None
        records = []
        for rec in data:
            if isinstance(rec, dict):
                rec = [rec.get(k) for k in ("a", "b", "c", "orient")]
            if not isinstance(rec, list) or len(rec) != 4:
                raise ArrangementError(f"bad arrangement record {rec!r}")
            records.append([str(x) for x in rec])
    else:
        records = [ln.split() for ln in text.splitlines() if ln.strip()]
    lines = []
    for k, rec in enumerate(records, 1):
        if len(rec) != 4:
            raise ArrangementError(f"record {k}: expected 'a b c orient'")
        try:
            a, b, c = (parse_rational(t) for t in rec[:3])
        except ValueError as exc:
            raise ArrangementError(f"record {k}: {exc}") from None
        if rec[3] not in ("+", "-"):
            raise ArrangementError(f"record {k}: orientation must be '+' or '-'")
        lines.append(Line(a, b, c, 1 if rec[3] == "+" else -1))
    return Arrangement(tuple(lines))


def serialize_arrangement(arr: Arrangement, fmt: str = "text") -> str:
    recs = [[format_rational(l.a), format_rational(l.b), format_rational(l.c), "+" if l.orient > 0 else "-"]
            for l in arr.lines]
    if fmt == "json":
        return json.dumps([dict(zip(("a", "b", "c", "orient"), r)) for r in recs]) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown arrangement format {fmt!r}")
    return "".join(" ".join(r) + "\n" for r in recs)


def realization_points(cs: CovectorSet, covectors: Sequence[SignVector]) -> Optional[List[Point]]:
    """Sample points realizing each covector, or None if one has no point."""
    pts = []
    for cv in covectors:
        p = cs.samples.get(cv)
        if p is None:
            return None
        pts.append(p)
    return pts
