"""Exact dense linear algebra over the rationals.

Rank, reduced row echelon form and kernel bases are computed with a
fraction-free (Bareiss) elimination over arbitrary-precision integers,
so no rounding ever happens and the output is deterministic: pivots are
chosen as the first nonzero entry, scanning top-to-bottom, in the
leftmost unresolved column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Entry = int | Fraction


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable dense matrix of exact rationals, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        object.__setattr__(
            self, "entries", tuple(Fraction(e) for e in self.entries)
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]], cols: int | None = None) -> "ExactMatrix":
        """Build a matrix from an iterable of rows; `cols` disambiguates the empty case."""
        rows = [list(r) for r in rows]
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != ncols:
                raise ValueError("cols does not match row length")
        else:
            ncols = 0 if cols is None else cols
        flat = tuple(Fraction(e) for r in rows for e in r)
        return cls(len(rows), ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n
        )

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_rows(
            [[self.at(i, j) for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def mul_vector(self, v: Sequence[Entry]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum((self.at(i, j) * Fraction(v[j]) for j in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def rank(self) -> int:
        """Rank over the rationals, computed exactly."""
        _, pivots = _integer_echelon(_integer_rows(self))
        return len(pivots)

    def rref(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the (strictly increasing) pivot columns."""
        echelon, pivots = _integer_echelon(_integer_rows(self))
        reduced = [[Fraction(e) for e in row] for row in echelon]
        # Normalize pivots to 1, then clear entries above each pivot.
        for r, c in enumerate(pivots):
            p = reduced[r][c]
            reduced[r] = [e / p for e in reduced[r]]
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            for i in range(r):
                f = reduced[i][c]
                if f:
                    reduced[i] = [a - f * b for a, b in zip(reduced[i], reduced[r])]
        # Pad with zero rows to preserve the shape.
        zero = [Fraction(0)] * self.cols
        while len(reduced) < self.rows:
            reduced.append(list(zero))
        return ExactMatrix.from_rows(reduced, cols=self.cols), tuple(pivots)

    def kernel_basis(self) -> list[tuple[int, ...]]:
        """Basis of the right null space as primitive integer vectors.

        Each vector has coprime integer entries and a positive first
        nonzero entry; the list has length cols - rank.
        """
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, c in enumerate(pivots):
                v[c] = -reduced.at(r, f)
            basis.append(_primitive(v))
        return basis

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in self.row(i)) for i in range(self.rows))


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    """Clear denominators row by row (row scaling preserves the row space)."""
    out = []
    for i in range(m.rows):
        row = m.row(i)
        scale = lcm(*(e.denominator for e in row)) if row else 1
        out.append([int(e * scale) for e in row])
    return out


def _integer_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Bareiss elimination to row echelon form.

    Returns the nonzero echelon rows (integer entries) and the pivot
    column list. Divisions by the previous pivot are exact by Sylvester's
    identity, which also holds when rank-deficient columns are skipped.
    """
    if not rows:
        return [], []
    n_rows, n_cols = len(rows), len(rows[0])
    a = [row[:] for row in rows]
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[r], a[pivot_row] = a[pivot_row], a[r]
        p = a[r][c]
        for i in range(r + 1, n_rows):
            head = a[i][c]
            if head == 0 and p == prev:
                continue  # row is already consistent with the minor scaling
            for j in range(c, n_cols):
                a[i][j] = (a[i][j] * p - head * a[r][j]) // prev
        prev = p
        pivots.append(c)
        r += 1
    return a[: len(pivots)], pivots


def _primitive(v: Iterable[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with positive leading entry."""
    v = list(v)
    scale = lcm(*(e.denominator for e in v)) if v else 1
    ints = [int(e * scale) for e in v]
    g = gcd(*ints) if any(ints) else 1
    ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)
