"""Shapes and standard Young tableaux with exact counting and streaming.

Two shape families are supported: m x n rectangles and staircases with row
lengths 1, 2, ..., n.  Staircase rows are stored shortest first and sit
right-justified, so column j of a staircase contains rows n-j+1 .. n and the
usual strict increase along rows and down columns applies verbatim.  Cells
are addressed 1-based as (row, col).

>>> hook_length_count(Shape.rect(2, 3))
5
>>> hook_length_count(Shape.staircase(3))
16
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .errors import CapExceeded, NotABijection, NotIncreasing

DEFAULT_ITERATE_CAP = 25


@dataclass(frozen=True)
class Shape:
    """A rectangle ("rect") or shortest-first staircase ("staircase")."""

    kind: str
    m: int
    n: int

    @staticmethod
    def rect(m: int, n: int) -> "Shape":
        if m < 1 or n < 1:
            raise ValueError("rectangle needs m, n >= 1")
        return Shape("rect", m, n)

    @staticmethod
    def staircase(n: int) -> "Shape":
        if n < 1:
            raise ValueError("staircase needs n >= 1")
        return Shape("staircase", n, n)

    def row_lengths(self) -> tuple[int, ...]:
        if self.kind == "rect":
            return (self.n,) * self.m
        return tuple(range(1, self.n + 1))

    def first_col(self, i: int) -> int:
        """1-based leftmost column of row i (rows are right-justified)."""
        if self.kind == "rect":
            return 1
        return self.n - i + 1

    def cell_count(self) -> int:
        return sum(self.row_lengths())

    def cells(self) -> tuple[tuple[int, int], ...]:
        """All (row, col) cells in row-major order."""
        out = []
        for i, length in enumerate(self.row_lengths(), start=1):
            c0 = self.first_col(i)
            out.extend((i, j) for j in range(c0, c0 + length))
        return tuple(out)

    def contains(self, i: int, j: int) -> bool:
        lengths = self.row_lengths()
        if not 1 <= i <= len(lengths):
            return False
        c0 = self.first_col(i)
        return c0 <= j < c0 + lengths[i - 1]


@dataclass(frozen=True)
class Tableau:
    """A standard filling of a shape; rows follow the shape's storage order."""

    shape: Shape
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - self.shape.first_col(i)]

    def cell_count(self) -> int:
        return self.shape.cell_count()

    def cells_by_value(self) -> tuple[tuple[int, int], ...]:
        """cells_by_value()[t-1] is the cell holding value t."""
        out: list[tuple[int, int]] = [(0, 0)] * self.cell_count()
        for i, row in enumerate(self.rows, start=1):
            c0 = self.shape.first_col(i)
            for off, v in enumerate(row):
                out[v - 1] = (i, c0 + off)
        return tuple(out)

    def row_sequence(self) -> tuple[int, ...]:
        """Row index of value t, for t = 1..N (the canonical sort key)."""
        return tuple(c[0] for c in self.cells_by_value())

    def transpose(self) -> "Tableau":
        if self.shape.kind != "rect":
            raise ValueError("transpose is defined for rectangles only")
        m, n = self.shape.m, self.shape.n
        new_rows = tuple(
            tuple(self.rows[i][j] for i in range(m)) for j in range(n)
        )
        return Tableau(Shape.rect(n, m), new_rows)


def validate_tableau(shape: Shape, rows) -> Tableau:
    """Check a filling and return it as a Tableau.

    Raises NotABijection when the multiset of entries is not exactly
    1..N, and NotIncreasing at the first row or column violation met in a
    row-major scan.
    """
    lengths = shape.row_lengths()
    rows = tuple(tuple(int(v) for v in r) for r in rows)
    if len(rows) != len(lengths) or any(
        len(r) != L for r, L in zip(rows, lengths)
    ):
        raise NotABijection(
            f"row lengths {[len(r) for r in rows]} do not match shape {lengths}"
        )
    n_cells = shape.cell_count()
    seen = sorted(v for r in rows for v in r)
    if seen != list(range(1, n_cells + 1)):
        raise NotABijection(f"entries are not a bijection onto 1..{n_cells}")
    t = Tableau(shape, rows)
    for i in range(1, len(lengths) + 1):
        c0 = shape.first_col(i)
        for j in range(c0, c0 + lengths[i - 1]):
            v = t.entry(i, j)
            if shape.contains(i, j + 1) and not v < t.entry(i, j + 1):
                raise NotIncreasing("row", (i, j))
            if shape.contains(i + 1, j) and not v < t.entry(i + 1, j):
                raise NotIncreasing("col", (i, j))
    return t


def iterate_syt(
    shape: Shape,
    cap: int = DEFAULT_ITERATE_CAP,
    row_prefix: tuple[int, ...] | None = None,
) -> Iterator[Tableau]:
    """Yield every standard filling of the shape exactly once.

    The stream is ordered lexicographically by the sequence "row index of
    value t" for t = 1..N, so consumers can split the work by fixing a
    row_prefix: only fillings whose row sequence starts with that prefix
    are produced, and distinct prefixes partition the stream.
    """
    n_cells = shape.cell_count()
    if n_cells > cap:
        raise CapExceeded(n_cells, cap)
    lengths = shape.row_lengths()
    k = len(lengths)
    first = [shape.first_col(i + 1) for i in range(k)]
    fills = [0] * k
    grid: list[list[int]] = [[0] * L for L in lengths]
    prefix = tuple(row_prefix or ())

    def placeable(r: int) -> bool:
        if fills[r] >= lengths[r]:
            return False
        col = first[r] + fills[r]
        if r == 0 or col < first[r - 1]:
            return True
        return col < first[r - 1] + fills[r - 1]

    def rec(t: int) -> Iterator[Tableau]:
        if t > n_cells:
            yield Tableau(
                shape, tuple(tuple(row) for row in grid)
            )
            return
        if t <= len(prefix):
            choices = [prefix[t - 1] - 1]
        else:
            choices = range(k)
        for r in choices:
            if 0 <= r < k and placeable(r):
                grid[r][fills[r]] = t
                fills[r] += 1
                yield from rec(t + 1)
                fills[r] -= 1
    return rec(1)


def hook_length_count(shape: Shape) -> int:
    """Number of standard fillings, by the hook length formula."""
    if shape.kind == "rect":
        m, n = shape.m, shape.n
        num = factorial(m * n)
        den = 1
        for j in range(m):
            num *= factorial(j)
            den *= factorial(n + j)
    else:
        n = shape.n
        num = factorial(n * (n + 1) // 2)
        den = 1
        for a in range(1, n + 1):
            for b in range(1, n + 2 - a):
                den *= 2 * (n + 1 - a - b) + 1
    count, rem = divmod(num, den)
    assert rem == 0
    return count


def catalan(n: int) -> int:
    """The n-th Catalan number C(2n, n)/(n + 1)."""
    from math import comb

    return comb(2 * n, n) // (n + 1)
