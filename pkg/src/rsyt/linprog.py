"""Exact rational linear programming for strict feasibility questions.

The single entry point `margin_solve` decides systems of the form

    s . v > 0   for every strict row s,
    w . v >= 0  for every weak row w,

with v free, by maximizing a margin t subject to s . v >= t, w . v >= 0 and
t <= 1.  Every system here is homogeneous, so the optimum is exactly 1 when
the strict system is solvable and exactly 0 otherwise, and at 0 the dual
yields nonnegative multipliers combining the rows to zero (an infeasibility
certificate).  All pivoting is exact over Fraction with Bland's least-index
rule, so results are deterministic and never suffer rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def simplex_max(
    A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]
) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Maximize c.z subject to A z <= b, z >= 0, where b >= 0.

    Returns (optimum, z, y) with y the dual values, one per constraint.
    Requires b >= 0 so the slack basis is feasible; raises on an unbounded
    objective.  Entering column: least index with positive reduced profit;
    leaving row: least ratio, ties broken by least basic variable index.
    """
    m = len(A)
    n = len(c)
    rows = [list(row) + [ZERO] * m + [bi] for row, bi in zip(A, b)]
    for i in range(m):
        rows[i][n + i] = ONE
    width = n + m + 1
    profit = list(c) + [ZERO] * m  # reduced profit per column
    value = ZERO
    basis = list(range(n, n + m))

    while True:
        pj = -1
        for j in range(n + m):
            if profit[j] > 0:
                pj = j
                break
        if pj < 0:
            break
        pi = -1
        best: Fraction | None = None
        for i in range(m):
            a = rows[i][pj]
            if a > 0:
                ratio = rows[i][width - 1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[pi]
                ):
                    best = ratio
                    pi = i
        if pi < 0:
            raise ArithmeticError("unbounded objective")
        piv_row = rows[pi]
        inv = ONE / piv_row[pj]
        if inv != 1:
            for j in range(width):
                if piv_row[j]:
                    piv_row[j] *= inv
        for i in range(m):
            if i == pi:
                continue
            f = rows[i][pj]
            if f:
                row = rows[i]
                for j in range(width):
                    pv = piv_row[j]
                    if pv:
                        row[j] -= f * pv
        f = profit[pj]
        if f:
            value += f * piv_row[width - 1]
            for j in range(n + m):
                pv = piv_row[j]
                if pv:
                    profit[j] -= f * pv
        basis[pi] = pj

    z = [ZERO] * (n + m)
    for i in range(m):
        z[basis[i]] = rows[i][width - 1]
    duals = [-profit[n + i] for i in range(m)]
    return value, z[:n], duals


@dataclass
class MarginResult:
    margin: Fraction
    point: tuple[Fraction, ...] | None
    strict_multipliers: tuple[Fraction, ...] | None
    weak_multipliers: tuple[Fraction, ...] | None

    @property
    def feasible(self) -> bool:
        return self.margin > 0


def margin_solve(strict, weak=(), dim: int | None = None) -> MarginResult:
    """Decide a homogeneous strict/weak system over free rational variables.

    strict and weak are sequences of coefficient rows (ints or Fractions).
    On success `point` satisfies every strict row with value >= margin > 0;
    on failure the multipliers are nonnegative, not all zero, and combine
    the rows (strict then weak) to the zero vector.
    """
    strict = [tuple(Fraction(x) for x in row) for row in strict]
    weak = [tuple(Fraction(x) for x in row) for row in weak]
    if dim is None:
        if strict:
            dim = len(strict[0])
        elif weak:
            dim = len(weak[0])
        else:
            dim = 0
    for row in strict + weak:
        if len(row) != dim:
            raise ValueError("inconsistent row dimensions")

    # Variables: p (dim), q (dim), t.  v = p - q.
    n = 2 * dim + 1
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for row in strict:
        A.append([-x for x in row] + [x for x in row] + [ONE])
        b.append(ZERO)
    for row in weak:
        A.append([-x for x in row] + [x for x in row] + [ZERO])
        b.append(ZERO)
    A.append([ZERO] * (2 * dim) + [ONE])
    b.append(ONE)
    c = [ZERO] * (2 * dim) + [ONE]

    value, z, duals = simplex_max(A, b, c)

    if value > 0:
        v = tuple(z[i] - z[dim + i] for i in range(dim))
        for row in strict:
            assert _dot(row, v) >= value
        for row in weak:
            assert _dot(row, v) >= 0
        return MarginResult(value, v, None, None)

    ns = len(strict)
    lam = tuple(duals[:ns])
    mu = tuple(duals[ns:ns + len(weak)])
    assert all(x >= 0 for x in lam) and all(x >= 0 for x in mu)
    assert any(x > 0 for x in lam) or any(x > 0 for x in mu)
    for k in range(dim):
        acc = ZERO
        for li, row in zip(lam, strict):
            if li:
                acc += li * row[k]
        for mi, row in zip(mu, weak):
            if mi:
                acc += mi * row[k]
        assert acc == 0
    return MarginResult(ZERO, None, lam, mu)


def _dot(row, v) -> Fraction:
    acc = ZERO
    for a, x in zip(row, v):
        if a and x:
            acc += a * x
    return acc


def exact_rank(rows) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    mat = [list(map(Fraction, row)) for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        pivot = next(
            (r for r in range(rank, len(mat)) if mat[r][col] != 0), None
        )
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for r in range(rank + 1, len(mat)):
            f = mat[r][col]
            if f:
                ratio = f / pv
                for j in range(col, ncols):
                    mat[r][j] -= ratio * mat[rank][j]
        rank += 1
        col += 1
    return rank
