"""Exact linear algebra over arbitrary-precision rationals.

Scalars are `fractions.Fraction`: always stored in lowest terms with a
positive denominator, so every operation below is exact -- no rounding
occurs anywhere.  Matrices are small, dense and immutable.  This is
desk-scale machinery (row reduction, kernels); sparse formats and
floating-point modes are deliberately out of scope.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]

_SCALAR_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_scalar(value: str | int) -> Fraction:
    """Parse the canonical scalar text "p/q" (or "p"); plain ints also accepted."""
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if not isinstance(value, str) or not _SCALAR_RE.match(value.strip()):
        raise ValueError(f"invalid scalar {value!r}: expected 'p' or 'p/q'")
    try:
        return Fraction(value.strip())
    except ZeroDivisionError:
        raise ValueError(f"invalid scalar {value!r}: zero denominator") from None


def format_scalar(value: Fraction | int) -> str:
    """Render a scalar as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with row-major rational entries."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Fraction | int]], cols: int | None = None) -> "Matrix":
        row_list = [tuple(Fraction(e) for e in row) for row in rows]
        if not row_list:
            return cls(0, 0 if cols is None else cols, ())
        width = len(row_list[0])
        if any(len(row) != width for row in row_list):
            raise ValueError("ragged rows")
        entries = tuple(e for row in row_list for e in row)
        return cls(len(row_list), width, entries)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(Fraction(1 if r == c else 0) for r in range(n) for c in range(n)))

    def at(self, r: int, c: int) -> Fraction:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> Vector:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def row_tuples(self) -> list[Vector]:
        return [self.row(r) for r in range(self.rows)]


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Vector:
    if len(v) != m.cols:
        raise ValueError("vector length does not match column count")
    return tuple(
        sum((m.at(r, c) * v[c] for c in range(m.cols)), Fraction(0)) for r in range(m.rows)
    )


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns.

    Pivot choice is the leftmost nonzero entry (exact arithmetic needs no
    size heuristics); pivots are scaled to 1 and fully eliminated, so the
    result is the unique RREF of the row space.
    """
    work = [list(m.row(r)) for r in range(m.rows)]
    pivots: list[int] = []
    lead = 0
    for col in range(m.cols):
        pivot_row = next((r for r in range(lead, m.rows) if work[r][col] != 0), None)
        if pivot_row is None:
            continue
        work[lead], work[pivot_row] = work[pivot_row], work[lead]
        pivot = work[lead][col]
        if pivot != 1:
            work[lead] = [e / pivot for e in work[lead]]
        for r in range(m.rows):
            if r != lead and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[lead])]
        pivots.append(col)
        lead += 1
        if lead == m.rows:
            break
    reduced = Matrix(m.rows, m.cols, tuple(e for row in work for e in row))
    return reduced, tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right null space; empty iff the matrix has full column rank.

    One basis vector per free column f: entry 1 at f, and at each pivot
    column the negated RREF entry of that pivot's row at f.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis: list[Vector] = []
    for f in free_cols:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced.at(r, f)
        basis.append(tuple(v))
    return basis


def reduce_against(v: Sequence[Fraction], rows: Sequence[Vector], pivots: Sequence[int]) -> Vector:
    """Reduce a vector against RREF rows: zero the pivot coordinates.

    The result is zero iff v lies in the row span.
    """
    work = [Fraction(e) for e in v]
    for row, p in zip(rows, pivots):
        c = work[p]
        if c != 0:
            work = [a - c * b for a, b in zip(work, row)]
    return tuple(work)
