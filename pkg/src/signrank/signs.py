"""Signs, sign vectors and (generalized) sign pattern matrices.

Signs are stored as the plain integers ``-1, 0, +1`` so that they compose
with ordinary arithmetic; :class:`Sign` gives them names and symbols.
A sign vector is a tuple of those integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

SignVector = Tuple[int, ...]

_CHAR_TO_SIGN = {"+": 1, "-": -1, "0": 0}
_SIGN_TO_CHAR = {1: "+", -1: "-", 0: "0"}


class Sign(enum.IntEnum):
    MINUS = -1
    ZERO = 0
    PLUS = 1

    @property
    def symbol(self) -> str:
        return _SIGN_TO_CHAR[int(self)]

    @classmethod
    def from_char(cls, ch: str) -> "Sign":
        try:
            return cls(_CHAR_TO_SIGN[ch])
        except KeyError:
            raise ValueError(f"illegal sign character {ch!r}") from None

    def __neg__(self) -> "Sign":
        return Sign(-int(self))


class SignFormatError(ValueError):
    """Raised for malformed sign matrix / sign vector text."""


def sign_of(x) -> int:
    """Exact sign of a number (``Fraction``, ``int``...)."""
    return (x > 0) - (x < 0)


def complement(v: Sequence[int]) -> SignVector:
    return tuple(-s for s in v)


def vector_to_text(v: Iterable[int]) -> str:
    return "".join(_SIGN_TO_CHAR[s] for s in v)


def vector_from_text(text: str) -> SignVector:
    try:
        return tuple(_CHAR_TO_SIGN[ch] for ch in text)
    except KeyError as exc:
        raise SignFormatError(f"illegal character {exc.args[0]!r} in {text!r}") from None


@dataclass(frozen=True)
class SignMatrix:
    """Dense m x n matrix over {-1, 0, +1}.

    ``strict`` is derived from the entries at construction time and is
    True exactly when no entry is zero.
    """

    rows: Tuple[SignVector, ...]
    strict: bool = field(init=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(s) for s in r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("sign matrix must have at least one row and one column")
        n = len(rows[0])
        for r in rows:
            if len(r) != n:
                raise ValueError("ragged sign matrix")
            for s in r:
                if s not in (-1, 0, 1):
                    raise ValueError(f"illegal sign entry {s!r}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "strict", all(s != 0 for r in rows for s in r))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.m, self.n

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> SignVector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> Tuple[SignVector, ...]:
        return tuple(zip(*self.rows))

    def transpose(self) -> "SignMatrix":
        return SignMatrix(self.columns())

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "SignMatrix":
        return cls(tuple(zip(*cols)))

    @classmethod
    def from_text(cls, text: str) -> "SignMatrix":
        return parse_matrix(text)

    def to_text(self) -> str:
        return serialize_matrix(self)

    def __str__(self) -> str:
        return self.to_text().rstrip("\n")


def parse_matrix(text: str) -> SignMatrix:
    """Parse the line-per-row text format (alphabet ``+ - 0``)."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise SignFormatError("empty sign matrix")
    width = len(lines[0])
    rows = []
    for lineno, line in enumerate(lines, 1):
        if len(line) != width:
            raise SignFormatError(f"line {lineno}: ragged row (expected {width} entries, got {len(line)})")
        if not line:
            raise SignFormatError(f"line {lineno}: empty row")
        try:
            rows.append(vector_from_text(line))
        except SignFormatError as exc:
            raise SignFormatError(f"line {lineno}: {exc}") from None
    return SignMatrix(tuple(rows))


def serialize_matrix(S: SignMatrix) -> str:
    return "".join(vector_to_text(r) + "\n" for r in S.rows)


def flip_rows(S: SignMatrix, rows: Iterable[int]) -> SignMatrix:
    """Complement the rows whose indices (0-based) are in ``rows``."""
    R = set(rows)
    for i in R:
        if not 0 <= i < S.m:
            raise IndexError(f"row index {i} out of range for {S.m} rows")
    return SignMatrix(tuple(complement(r) if i in R else r for i, r in enumerate(S.rows)))


def sign_of_rational_matrix(A: Sequence[Sequence]) -> SignMatrix:
    return SignMatrix(tuple(tuple(sign_of(Fraction(x)) for x in row) for row in A))
