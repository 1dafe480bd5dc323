"""Exact enumeration, extension counts, and bounds for realizable rectangles.

Enumeration walks standard fillings in the canonical stream order and decides
realizability exactly.  The pruned walk tests each placed prefix: the prefix
constraints (the chain on placed values, every next-placeable corner cell
exceeding the last placed value, and both witness vectors increasing) are
feasible exactly when the prefix extends to a realizable completion, so
pruning never changes the census, only the work.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import comb, factorial

from .errors import CapExceeded, NotGeneric, NotRealizableError
from .linprog import margin_solve
from .realizability import (
    OuterSumWitness,
    decide_realizable,
    tableau_of_outer_sum,
)
from .tableaux import Shape, Tableau, catalan, hook_length_count

DEFAULT_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class EnumerationReport:
    m: int
    n: int
    realizable_count: int
    total_count: int
    pruned: bool
    nonrealizable: tuple[Tableau, ...] | None
    elapsed: float


def _reduced_row(
    m: int, n: int, hi: tuple[int, int], lo: tuple[int, int]
) -> tuple[int, ...]:
    """Row for (sum at hi) - (sum at lo) > 0 over (x_2..x_m, y_2..y_n)."""
    row = [0] * (m - 1 + n - 1)
    (i1, j1), (i2, j2) = lo, hi
    if i2 >= 2:
        row[i2 - 2] += 1
    if i1 >= 2:
        row[i1 - 2] -= 1
    if j2 >= 2:
        row[m - 1 + j2 - 2] += 1
    if j1 >= 2:
        row[m - 1 + j1 - 2] -= 1
    return tuple(row)


def _cone_rows(m: int, n: int) -> list[tuple[int, ...]]:
    rows = []
    for i in range(1, m):
        rows.append(_reduced_row(m, n, (i + 1, 1), (i, 1)))
    for j in range(1, n):
        rows.append(_reduced_row(m, n, (1, j + 1), (1, j)))
    return rows


def _prefix_feasible(
    m: int,
    n: int,
    placed: list[tuple[int, int]],
    fills: list[int],
    cone: list[tuple[int, ...]],
) -> bool:
    rows = [
        _reduced_row(m, n, hi, lo) for lo, hi in zip(placed, placed[1:])
    ]
    last = placed[-1]
    for i in range(1, m + 1):
        j = fills[i - 1] + 1
        if j > n:
            continue
        if i > 1 and fills[i - 2] < j:
            continue
        rows.append(_reduced_row(m, n, (i, j), last))
    rows.extend(cone)
    return margin_solve(rows, dim=m - 1 + n - 1).feasible


def _full_feasible(m: int, n: int, placed: list[tuple[int, int]]) -> bool:
    rows = [
        _reduced_row(m, n, hi, lo) for lo, hi in zip(placed, placed[1:])
    ]
    return margin_solve(rows, dim=m - 1 + n - 1).feasible


def _enumerate_chunk(args) -> tuple[int, int, list[tuple[tuple[int, ...], ...]]]:
    """Walk one stream chunk; returns (realizable, leaves, bad_row_tuples)."""
    m, n, prune, collect, prefix = args
    cone = _cone_rows(m, n)
    n_cells = m * n
    fills = [0] * m
    grid = [[0] * n for _ in range(m)]
    placed: list[tuple[int, int]] = []
    realizable = 0
    leaves = 0
    bad: list[tuple[tuple[int, ...], ...]] = []

    def snapshot() -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row) for row in grid)

    def walk(t: int, alive: bool) -> None:
        nonlocal realizable, leaves
        if t > n_cells:
            leaves += 1
            if prune:
                if alive:
                    realizable += 1
                elif collect:
                    bad.append(snapshot())
            else:
                if _full_feasible(m, n, placed):
                    realizable += 1
                elif collect:
                    bad.append(snapshot())
            return
        rows = (
            [prefix[t - 1]] if t <= len(prefix) else range(1, m + 1)
        )
        for i in rows:
            if not 1 <= i <= m or fills[i - 1] >= n:
                continue
            if i > 1 and fills[i - 2] <= fills[i - 1]:
                continue
            j = fills[i - 1] + 1
            grid[i - 1][j - 1] = t
            fills[i - 1] += 1
            placed.append((i, j))
            if prune and alive:
                ok = t < 3 or _prefix_feasible(m, n, placed, fills, cone)
            else:
                ok = alive
            if not prune or ok or collect:
                walk(t + 1, ok)
            placed.pop()
            fills[i - 1] -= 1
            grid[i - 1][j - 1] = 0

    walk(1, True)
    return realizable, leaves, bad


def _split_prefixes(m: int, n: int, depth: int) -> list[tuple[int, ...]]:
    """All valid initial row sequences of the given depth, in stream order."""
    out: list[tuple[int, ...]] = []

    def rec(fills: list[int], acc: tuple[int, ...]) -> None:
        if len(acc) == depth:
            out.append(acc)
            return
        for i in range(1, m + 1):
            if fills[i - 1] >= n:
                continue
            if i > 1 and fills[i - 2] <= fills[i - 1]:
                continue
            fills[i - 1] += 1
            rec(fills, acc + (i,))
            fills[i - 1] -= 1

    rec([0] * m, ())
    return out


def enumerate_realizable(
    m: int,
    n: int,
    prune: bool = True,
    collect_nonrealizable: bool = False,
    cap: int = DEFAULT_ENUMERATION_CAP,
    jobs: int = 1,
) -> EnumerationReport:
    """Census of realizable m x n standard tableaux.

    Pruned and unpruned walks agree; pruning only skips subtrees whose
    prefix already fails.  With collect_nonrealizable the report carries
    every non-realizable tableau, in stream order.
    """
    if m < 1 or n < 1:
        raise ValueError("m, n >= 1 required")
    if m * n > cap:
        raise CapExceeded(m * n, cap)
    start = time.perf_counter()
    if jobs > 1 and m * n >= 6:
        depth = 4 if m > 1 else 1
        prefixes = _split_prefixes(m, n, depth)
        tasks = [(m, n, prune, collect_nonrealizable, p) for p in prefixes]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_enumerate_chunk, tasks))
        realizable = sum(p[0] for p in parts)
        leaves = sum(p[1] for p in parts)
        bad_rows = [rows for p in parts for rows in p[2]]
    else:
        realizable, leaves, bad_rows = _enumerate_chunk(
            (m, n, prune, collect_nonrealizable, ())
        )
    total = hook_length_count(Shape.rect(m, n))
    if not prune or collect_nonrealizable:
        assert leaves == total
    examples = (
        tuple(Tableau(Shape.rect(m, n), rows) for rows in bad_rows)
        if collect_nonrealizable
        else None
    )
    elapsed = time.perf_counter() - start
    return EnumerationReport(
        m, n, realizable, total, prune, examples, elapsed
    )


def extension_count_formula(t: Tableau) -> int:
    """Extensions of a realizable tableau by one bottom row, counted.

    For a realizable r x n tableau with bottom row sum S the number of
    realizable (r+1) x n extensions sharing any fixed witness of the first
    r rows is n^2 * r + 1 - S.
    """
    r, n = t.shape.m, t.shape.n
    bottom = sum(t.rows[r - 1])
    return n * n * r + 1 - bottom


def fixed_witness_extensions(w: OuterSumWitness) -> list[Tableau]:
    """All rank tables obtained by appending one value to the x vector.

    The appended coordinate only changes the outcome when it crosses one of
    the critical values x_k + y_l - y_j, so one representative per interval
    enumerates every extension.  Requires those critical values pairwise
    distinct and distinct from the last x coordinate.
    """
    r, n = w.m, w.n
    tableau_of_outer_sum(w)  # genericity of the base pair
    top = w.x[-1]
    crits: dict[Fraction, tuple[int, int, int]] = {}
    for k in range(r):
        for l in range(n):
            for j in range(n):
                if l == j:
                    continue
                v = w.x[k] + w.y[l] - w.y[j]
                key = (k + 1, l + 1, j + 1)
                if v == top:
                    raise NotGeneric(
                        f"critical value at {key} equals the last x entry",
                        colliding=[key],
                    )
                if v in crits:
                    raise NotGeneric(
                        f"critical values collide at {crits[v]} and {key}",
                        colliding=[crits[v], key],
                    )
                crits[v] = key
    cuts = sorted(v for v in crits if v > top)
    samples = []
    lo = top
    for hi in cuts:
        samples.append((lo + hi) / 2)
        lo = hi
    samples.append(lo + 1)
    out = []
    for x_new in samples:
        extended = OuterSumWitness(w.x + (x_new,), w.y)
        out.append(tableau_of_outer_sum(extended))
    return out


def enumerate_single_row_extensions(
    t: Tableau, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Tableau]:
    """Every realizable extension of t by one new bottom row.

    Candidates interleave the n new cells into t's value order subject to
    the column constraints; each candidate is then decided exactly.
    """
    r, n = t.shape.m, t.shape.n
    if (r + 1) * n > cap:
        raise CapExceeded((r + 1) * n, cap)
    if not decide_realizable(t).realizable:
        raise NotRealizableError(
            "single-row extensions require a realizable base tableau"
        )
    old_cells = t.cells_by_value()
    total = (r + 1) * n
    out: list[Tableau] = []
    merged: list[tuple[int, int]] = []

    def rec(oi: int, bj: int) -> None:
        if len(merged) == total:
            grid = [[0] * n for _ in range(r + 1)]
            for rank, (i, j) in enumerate(merged, start=1):
                grid[i - 1][j - 1] = rank
            cand = Tableau(
                Shape.rect(r + 1, n), tuple(tuple(row) for row in grid)
            )
            if decide_realizable(cand).realizable:
                out.append(cand)
            return
        if oi < len(old_cells):
            merged.append(old_cells[oi])
            rec(oi + 1, bj)
            merged.pop()
        if bj < n:
            above = old_cells.index((r, bj + 1))
            if above < oi:
                merged.append((r + 1, bj + 1))
                rec(oi, bj + 1)
                merged.pop()

    rec(0, 0)
    return out


@dataclass(frozen=True)
class BoundsReport:
    m: int
    n: int
    upper: Fraction
    lower: int
    syt_total: int
    ratio_upper: Fraction


def _golden_counts() -> dict[tuple[int, int], int]:
    try:
        text = (
            resources.files("rsyt").joinpath("data/golden_counts.json")
        ).read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        return {}
    raw = json.loads(text)
    out = {}
    for key, value in raw.items():
        a, b = key.split("x")
        out[(int(a), int(b))] = int(value)
    return out


def hyperplane_count(m: int, n: int) -> int:
    return 2 * comb(m, 2) * comb(n, 2) + comb(m, 2) + comb(n, 2)


def bounds(m: int, n: int) -> BoundsReport:
    """Sandwich the realizable count between the proven bounds.

    upper sums binomials of the hyperplane count (regions can only be so
    many); lower iterates the one-row extension bound from the best exact
    seed available (cached census values, else the Catalan 2 x n base),
    using transpose symmetry freely.
    """
    golden = _golden_counts()

    def lower_of(a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        if a == 1:
            return 1
        if a == 2:
            best = catalan(b)
        else:
            best = 0
        for (ga, gb), v in golden.items():
            if (min(ga, gb), max(ga, gb)) == (a, b):
                best = max(best, v)
        if a >= 3:
            best = max(best, lower_of(a - 1, b) * (comb(b, 2) + 1))
        if b > a:
            best = max(best, lower_of(a, b - 1) * (comb(a, 2) + 1))
        return best

    h = hyperplane_count(m, n)
    upper = Fraction(
        sum(comb(h, i) for i in range(m + n + 1)),
        factorial(m) * factorial(n),
    )
    total = hook_length_count(Shape.rect(m, n))
    return BoundsReport(
        m, n, upper, lower_of(m, n), total, upper / total
    )


def region_count_crosscheck(m: int, n: int, max_sum: int = 6) -> int:
    """Count the regions cut out by all rank-tie hyperplanes, exactly.

    Works in the quotient with x_1 = y_1 = 0 and extends sign vectors one
    hyperplane at a time, keeping an interior point per region.  The result
    equals m! n! times the realizable census, which is the cross-check.
    """
    if m + n > max_sum:
        raise CapExceeded(m + n, max_sum, what="m+n")
    normals: list[tuple[int, ...]] = []
    for i in range(1, m + 1):
        for k in range(i + 1, m + 1):
            normals.append(_reduced_row(m, n, (k, 1), (i, 1)))
    for j in range(1, n + 1):
        for l in range(j + 1, n + 1):
            normals.append(_reduced_row(m, n, (1, l), (1, j)))
    def mixed_row(i: int, k: int, j: int, l: int, sy: int) -> tuple[int, ...]:
        row = [0] * (m - 1 + n - 1)
        if i >= 2:
            row[i - 2] += 1
        if k >= 2:
            row[k - 2] -= 1
        if j >= 2:
            row[m - 1 + j - 2] -= sy
        if l >= 2:
            row[m - 1 + l - 2] += sy
        return tuple(row)

    for i in range(1, m + 1):
        for k in range(i + 1, m + 1):
            for j in range(1, n + 1):
                for l in range(j + 1, n + 1):
                    normals.append(mixed_row(i, k, j, l, 1))
                    normals.append(mixed_row(i, k, j, l, -1))
    assert len(set(normals)) == len(normals) == hyperplane_count(m, n)

    dim = m - 1 + n - 1
    regions: list[tuple[list[int], tuple | None]] = [([], None)]
    for h in normals:
        nxt: list[tuple[list[int], tuple | None]] = []
        for signs, point in regions:
            here = (
                sum(c * p for c, p in zip(h, point)) if point is not None
                else 0
            )
            sides = [1, -1] if here == 0 else [1 if here > 0 else -1]
            if here != 0:
                nxt.append((signs + sides, point))
                sides = [-sides[0]]
            for s in sides:
                rows = [
                    tuple(sg * c for c in norm)
                    for sg, norm in zip(signs, normals)
                ]
                rows.append(tuple(s * c for c in h))
                res = margin_solve(rows, dim=dim)
                if res.feasible:
                    nxt.append((signs + [s], res.point))
        regions = nxt
    return len(regions)
