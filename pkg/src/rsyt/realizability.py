"""Realizability of rectangular tableaux as rank tables of outer sums.

A pair of strictly increasing rational vectors x (length m) and y (length n)
induces the outer sum matrix x_i + y_j.  When all m*n sums are distinct,
ranking them from smallest to largest fills the rectangle with 1..mn and the
result is a standard tableau.  A tableau that arises this way is called
realizable; this module decides the question exactly and produces either a
witness pair or a certificate of impossibility.

The certificate comes in two flavors.  The dual of the margin program gives
nonnegative multipliers combining the order constraints to zero (a Farkas
certificate).  Independently, a "taboo" certificate exhibits two disjoint
equally sized cell sets, balanced row by row and column by column, whose
paired entries are strictly ordered; no outer sum can order such sets, so
its presence proves non-realizability on purely combinatorial grounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    BadInput,
    DimensionMismatch,
    InvalidTableau,
    NotGeneric,
    RsytError,
)
from .linprog import margin_solve
from .tableaux import Shape, Tableau, iterate_syt, validate_tableau


@dataclass(frozen=True)
class OuterSumWitness:
    """Strictly increasing rational vectors whose outer sum ranks a tableau."""

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    def __post_init__(self):
        x = tuple(Fraction(v) for v in self.x)
        y = tuple(Fraction(v) for v in self.y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        if not x or not y:
            raise BadInput("witness vectors must be nonempty")
        if any(a >= b for a, b in zip(x, x[1:])):
            raise BadInput("witness x must be strictly increasing")
        if any(a >= b for a, b in zip(y, y[1:])):
            raise BadInput("witness y must be strictly increasing")

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return len(self.y)

    def sums(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(xi + yj for yj in self.y) for xi in self.x)

    def translated(self, dx, dy) -> "OuterSumWitness":
        dx, dy = Fraction(dx), Fraction(dy)
        return OuterSumWitness(
            tuple(v + dx for v in self.x), tuple(v + dy for v in self.y)
        )


def tableau_of_outer_sum(w: OuterSumWitness) -> Tableau:
    """Rank table of the outer sum; raises NotGeneric on a collision.

    >>> w = OuterSumWitness((0, 2, 9), (0, 1, 5, 15, 16))
    >>> tableau_of_outer_sum(w).rows[0]
    (1, 2, 5, 10, 11)
    """
    entries = []
    for i, xi in enumerate(w.x, start=1):
        for j, yj in enumerate(w.y, start=1):
            entries.append((xi + yj, i, j))
    entries.sort(key=lambda e: e[0])
    for (s1, i1, j1), (s2, i2, j2) in zip(entries, entries[1:]):
        if s1 == s2:
            raise NotGeneric(
                f"outer sums collide at cells {(i1, j1)} and {(i2, j2)}",
                colliding=[(i1, j1), (i2, j2)],
            )
    grid = [[0] * w.n for _ in range(w.m)]
    for rank, (_, i, j) in enumerate(entries, start=1):
        grid[i - 1][j - 1] = rank
    return Tableau(Shape.rect(w.m, w.n), tuple(tuple(r) for r in grid))


@dataclass(frozen=True)
class StrictSystem:
    """Homogeneous strict inequalities row . (x, y) > 0 over m + n symbols.

    Each row lists integer coefficients for (x_1..x_m, y_1..y_n) and both
    blocks sum to zero, so the system is invariant under translating either
    vector.
    """

    m: int
    n: int
    rows: tuple[tuple[int, ...], ...]

    def reduced_rows(self) -> list[tuple[int, ...]]:
        """Rows with the x_1 and y_1 columns dropped (both normalized to 0)."""
        m = self.m
        return [row[1:m] + row[m + 1:] for row in self.rows]

    @property
    def dim(self) -> int:
        return self.m + self.n


def strict_system_of(t: Tableau, full: bool = False) -> StrictSystem:
    """Order constraints forcing the outer sum to rank cells like t.

    The default system compares consecutive values only (mn - 1 rows), which
    is equivalent to the full pairwise set by transitivity; pass full=True
    for all mn(mn-1)/2 comparisons when a certificate over every pair reads
    better.
    """
    if t.shape.kind != "rect":
        raise InvalidTableau("strict systems are defined for rectangles")
    m, n = t.shape.m, t.shape.n
    cells = t.cells_by_value()

    def row_between(lo: tuple[int, int], hi: tuple[int, int]) -> tuple[int, ...]:
        row = [0] * (m + n)
        (i1, j1), (i2, j2) = lo, hi
        row[i2 - 1] += 1
        row[i1 - 1] -= 1
        row[m + j2 - 1] += 1
        row[m + j1 - 1] -= 1
        return tuple(row)

    if full:
        rows = tuple(
            row_between(cells[a], cells[b])
            for a in range(len(cells))
            for b in range(a + 1, len(cells))
        )
    else:
        rows = tuple(
            row_between(lo, hi) for lo, hi in zip(cells, cells[1:])
        )
    return StrictSystem(m, n, rows)


@dataclass(frozen=True)
class FarkasCertificate:
    """Nonnegative multipliers combining strict rows to the zero vector."""

    multipliers: tuple[Fraction, ...]


def verify_farkas(system: StrictSystem, cert: FarkasCertificate) -> bool:
    lam = cert.multipliers
    if len(lam) != len(system.rows):
        return False
    if any(v < 0 for v in lam) or all(v == 0 for v in lam):
        return False
    width = system.m + system.n
    for k in range(width):
        if sum(li * row[k] for li, row in zip(lam, system.rows) if li) != 0:
            return False
    return True


@dataclass(frozen=True)
class FeasibilityResult:
    realizable: bool
    witness: OuterSumWitness | None
    margin: Fraction | None
    certificate: FarkasCertificate | None
    system: StrictSystem


def _checked_rect(t: Tableau) -> Tableau:
    if t.shape.kind != "rect":
        raise InvalidTableau("a rectangular tableau is required")
    try:
        return validate_tableau(t.shape, t.rows)
    except RsytError as e:
        raise InvalidTableau(str(e)) from e


def decide_realizable(t: Tableau, full_system: bool = False) -> FeasibilityResult:
    """Decide realizability exactly, with a witness or a Farkas certificate.

    The margin program fixes x_1 = y_1 = 0, relaxes every strict constraint
    to ">= t" with t <= 1 and maximizes t by exact pivoting.  A positive
    optimum yields a witness, rescaled to the smallest integer vector; a zero
    optimum yields verified dual multipliers.
    """
    t = _checked_rect(t)
    system = strict_system_of(t, full=full_system)
    m, n = system.m, system.n
    res = margin_solve(system.reduced_rows(), dim=m + n - 2)
    if not res.feasible:
        cert = FarkasCertificate(res.strict_multipliers)
        assert verify_farkas(system, cert)
        return FeasibilityResult(False, None, None, cert, system)

    v = res.point
    x = (Fraction(0),) + tuple(v[: m - 1])
    y = (Fraction(0),) + tuple(v[m - 1:])
    scale = lcm(*(c.denominator for c in x + y)) if (x + y) else 1
    ints = [int(c * scale) for c in x + y]
    common = 0
    for value in ints:
        common = gcd(common, abs(value))
    if common > 1:
        ints = [value // common for value in ints]
    witness = OuterSumWitness(
        tuple(Fraction(v) for v in ints[:m]),
        tuple(Fraction(v) for v in ints[m:]),
    )
    assert tableau_of_outer_sum(witness).rows == t.rows
    flat = witness.x + witness.y
    if system.rows:
        margin = min(
            sum(c * val for c, val in zip(row, flat)) for row in system.rows
        )
    else:
        margin = Fraction(1)
    assert margin > 0
    return FeasibilityResult(True, witness, margin, None, system)


def verify_witness(t: Tableau, w: OuterSumWitness) -> bool:
    """True iff the outer sum of w is generic and ranks exactly like t."""
    if t.shape.kind != "rect":
        raise InvalidTableau("a rectangular tableau is required")
    if (w.m, w.n) != (t.shape.m, t.shape.n):
        raise DimensionMismatch(
            f"witness is {w.m}x{w.n}, tableau is {t.shape.m}x{t.shape.n}"
        )
    try:
        return tableau_of_outer_sum(w).rows == t.rows
    except NotGeneric:
        return False


@dataclass(frozen=True)
class TabooCertificate:
    """Disjoint balanced cell sets with entrywise ordered pairing.

    a_cells[k] pairs with b_cells[k]; every entry on the a side is smaller.
    Row and column counts of the two sets agree, which no outer sum ranking
    can accommodate.
    """

    a_cells: tuple[tuple[int, int], ...]
    b_cells: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.a_cells)


def verify_taboo(t: Tableau, cert: TabooCertificate) -> bool:
    """Check every certificate condition; empty certificates are rejected."""
    a, b = cert.a_cells, cert.b_cells
    if len(a) == 0 or len(a) != len(b):
        return False
    cells = set(a) | set(b)
    if len(cells) != 2 * len(a):
        return False
    if any(not t.shape.contains(i, j) for (i, j) in cells):
        return False
    if any(t.entry(*ca) >= t.entry(*cb) for ca, cb in zip(a, b)):
        return False
    for axis in (0, 1):
        counts: dict[int, int] = {}
        for (cell_a, cell_b) in zip(a, b):
            counts[cell_a[axis]] = counts.get(cell_a[axis], 0) + 1
            counts[cell_b[axis]] = counts.get(cell_b[axis], 0) - 1
        if any(v != 0 for v in counts.values()):
            return False
    return True


def _match_pairing(
    t: Tableau,
    a_cells: tuple[tuple[int, int], ...],
    b_cells: tuple[tuple[int, int], ...],
) -> tuple[tuple[int, int], ...] | None:
    """Perfect matching a -> b with T(a) < T(b), by augmenting paths."""
    size = len(a_cells)
    adj = [
        [t.entry(*a) < t.entry(*b) for b in b_cells] for a in a_cells
    ]
    match_of_b: list[int | None] = [None] * size

    def augment(ai: int, seen: list[bool]) -> bool:
        for bi in range(size):
            if adj[ai][bi] and not seen[bi]:
                seen[bi] = True
                if match_of_b[bi] is None or augment(match_of_b[bi], seen):
                    match_of_b[bi] = ai
                    return True
        return False

    for ai in range(size):
        if not augment(ai, [False] * size):
            return None
    paired: list[tuple[int, int]] = [(0, 0)] * size
    for bi, ai in enumerate(match_of_b):
        paired[ai] = b_cells[bi]
    return tuple(paired)


def find_taboo_certificate(
    t: Tableau, max_size: int = 4
) -> TabooCertificate | None:
    """Search for a balanced ordered pair of cell sets, smallest size first.

    Candidate a-sets are scanned in lexicographic cell order; for each, the
    b-set must occupy the same per-row counts, so candidates are assembled
    row by row and filtered by column counts before the pairing check.
    Returns None when no certificate of size <= max_size exists.
    """
    t = _checked_rect(t)
    m, n = t.shape.m, t.shape.n
    if not 1 <= max_size <= (m * n) // 2:
        raise BadInput(
            f"max_size must lie in 1..{(m * n) // 2} for a {m}x{n} tableau"
        )
    all_cells = t.shape.cells()
    for size in range(1, max_size + 1):
        for a_cells in itertools.combinations(all_cells, size):
            row_counts: dict[int, int] = {}
            col_counts: dict[int, int] = {}
            for (i, j) in a_cells:
                row_counts[i] = row_counts.get(i, 0) + 1
                col_counts[j] = col_counts.get(j, 0) + 1
            if any(2 * c > n for c in row_counts.values()):
                continue
            if any(2 * c > m for c in col_counts.values()):
                continue
            a_set = set(a_cells)
            per_row = [
                itertools.combinations(
                    [
                        (i, j)
                        for j in range(1, n + 1)
                        if (i, j) not in a_set
                    ],
                    row_counts.get(i, 0),
                )
                for i in sorted(row_counts)
            ]
            for choice in itertools.product(*per_row):
                b_cells = tuple(c for group in choice for c in group)
                b_cols: dict[int, int] = {}
                for (_, j) in b_cells:
                    b_cols[j] = b_cols.get(j, 0) + 1
                if b_cols != col_counts:
                    continue
                paired = _match_pairing(t, a_cells, b_cells)
                if paired is not None:
                    cert = TabooCertificate(a_cells, paired)
                    assert verify_taboo(t, cert)
                    return cert
    return None


@dataclass(frozen=True)
class TabooSurvey:
    """Observed coverage of taboo certificates over one shape (data only)."""

    m: int
    n: int
    max_size: int
    total: int
    nonrealizable: int
    certified: int
    uncertified: tuple[Tableau, ...]


def survey_taboo_completeness(
    m: int, n: int, max_size: int | None = None, cap: int = 20
) -> TabooSurvey:
    """Report how many non-realizable m x n tableaux carry a certificate.

    This is an observational harness: it never asserts that certificates
    must exist, it only tabulates where the search finds them.
    """
    if max_size is None:
        max_size = (m * n) // 2
    total = 0
    nonrealizable = 0
    certified = 0
    uncertified: list[Tableau] = []
    for t in iterate_syt(Shape.rect(m, n), cap=cap):
        total += 1
        if decide_realizable(t).realizable:
            continue
        nonrealizable += 1
        if find_taboo_certificate(t, max_size=max_size) is not None:
            certified += 1
        else:
            uncertified.append(t)
    return TabooSurvey(
        m, n, max_size, total, nonrealizable, certified, tuple(uncertified)
    )
