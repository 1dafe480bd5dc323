"""Vertices, edges, normal cones, and face dimensions of a permutahedron
slice: the convex hull of all permutations of {1,...,m+n} whose first m
coordinates sum to a fixed integer k.

Vertices of the slice are exactly those permutations: adjacent vertices of
the full permutahedron have prefix sums differing by at most 1, so an
integer hyperplane never cuts an edge interior (tested, not assumed).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from .errors import (
    BadInput,
    DimensionMismatch,
    EmptySlice,
    FaceMissesHyperplane,
)
from .linprog import exact_rank, margin_solve


@dataclass(frozen=True)
class SliceVertex:
    perm: tuple[int, ...]
    m: int
    n: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        total = self.m + self.n
        if self.m < 1 or self.n < 1:
            raise BadInput("m, n >= 1 required")
        if sorted(self.perm) != list(range(1, total + 1)):
            raise BadInput(f"perm must rearrange 1..{total}")
        if sum(self.perm[: self.m]) != self.k:
            raise BadInput(
                f"first {self.m} coordinates sum to {sum(self.perm[:self.m])},"
                f" not k={self.k}"
            )

    def positions(self) -> tuple[int, ...]:
        """positions[t-1] = 1-based coordinate holding value t."""
        pos = [0] * len(self.perm)
        for i, t in enumerate(self.perm, start=1):
            pos[t - 1] = i
        return tuple(pos)


def slice_sum_range(m: int, n: int) -> tuple[int, int]:
    lo = m * (m + 1) // 2
    hi = sum(range(n + 1, m + n + 1))
    return lo, hi


def slice_vertices(m: int, n: int, k: int) -> list[SliceVertex]:
    """All vertices of the slice, sorted by coordinate vector."""
    lo, hi = slice_sum_range(m, n)
    if not lo <= k <= hi:
        raise EmptySlice(
            f"k={k} outside [{lo}, {hi}] for (m, n)=({m}, {n})"
        )
    total = m + n
    out = []
    for first in combinations(range(1, total + 1), m):
        if sum(first) != k:
            continue
        rest = [v for v in range(1, total + 1) if v not in first]
        for pa in permutations(first):
            for pb in permutations(rest):
                out.append(SliceVertex(pa + pb, m, n, k))
    out.sort(key=lambda v: v.perm)
    return out


def _box_partitions(total: int, parts: int, largest: int) -> int:
    """Partitions of total into at most `parts` parts, each at most `largest`."""
    if total < 0:
        return 0

    @lru_cache(maxsize=None)
    def rec(t: int, p: int, cap: int) -> int:
        if t == 0:
            return 1
        if p == 0 or cap == 0:
            return 0
        return sum(rec(t - c, p - 1, c) for c in range(1, min(cap, t) + 1))

    return rec(total, parts, largest)


def vertex_count_formula(m: int, n: int, k: int) -> int:
    lo, _ = slice_sum_range(m, n)
    return _box_partitions(k - lo, m, n) * factorial(m) * factorial(n)


@dataclass(frozen=True)
class LabeledLatticePath:
    """Steps from (0,0) to (n,m) in value order, each carrying its label."""

    steps: tuple[tuple[str, int], ...]
    m: int
    n: int

    @property
    def area(self) -> int:
        """Cells of the m x n box above the path."""
        x = 0
        total = 0
        for direction, _ in self.steps:
            if direction == "right":
                x += 1
            else:
                total += x
        return total


def lattice_path_of_vertex(v: SliceVertex) -> LabeledLatticePath:
    pos = v.positions()
    steps = []
    for t in range(1, v.m + v.n + 1):
        i = pos[t - 1]
        steps.append(("up", i) if i <= v.m else ("right", i))
    path = LabeledLatticePath(tuple(steps), v.m, v.n)
    assert path.area == v.k - v.m * (v.m + 1) // 2
    return path


def _swap_values(perm: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    out = list(perm)
    ia, ib = perm.index(a), perm.index(b)
    out[ia], out[ib] = b, a
    return tuple(out)


def vertex_neighbors(v: SliceVertex) -> list[SliceVertex]:
    """Adjacent slice vertices via the three combinatorial edge moves.

    On the labeled lattice path these are: swapping labels of consecutive
    same-direction steps; flipping an inner and an outer corner at once
    when the two corners share no step (a box slides, labels ride along);
    and swapping the outer labels of an up-right-up or right-up-right
    corner pattern.
    """
    total = v.m + v.n
    pos = v.positions()

    def is_up(t: int) -> bool:
        return pos[t - 1] <= v.m

    perms = set()
    for t in range(1, total):
        if is_up(t) == is_up(t + 1):
            perms.add(_swap_values(v.perm, t, t + 1))
    for t in range(1, total - 1):
        if is_up(t) == is_up(t + 2) != is_up(t + 1):
            perms.add(_swap_values(v.perm, t, t + 2))
    inner = [
        a for a in range(1, total) if not is_up(a) and is_up(a + 1)
    ]
    outer = [
        b for b in range(1, total) if is_up(b) and not is_up(b + 1)
    ]
    for a in inner:
        for b in outer:
            if abs(a - b) >= 2:
                p = _swap_values(v.perm, a, a + 1)
                perms.add(_swap_values(p, b, b + 1))
    return sorted(
        (SliceVertex(p, v.m, v.n, v.k) for p in perms),
        key=lambda w: w.perm,
    )


def slice_edges(
    m: int, n: int, k: int
) -> list[tuple[SliceVertex, SliceVertex]]:
    """Unordered vertex pairs joined by an edge, canonically sorted."""
    vertices = slice_vertices(m, n, k)
    index = {v.perm for v in vertices}
    seen = set()
    for v in vertices:
        for w in vertex_neighbors(v):
            assert w.perm in index
            seen.add(tuple(sorted((v.perm, w.perm))))
    return [
        (SliceVertex(a, m, n, k), SliceVertex(b, m, n, k))
        for a, b in sorted(seen)
    ]


@lru_cache(maxsize=64)
def _vertex_vectors(m: int, n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(v.perm for v in slice_vertices(m, n, k))


def edge_oracle(u: SliceVertex, v: SliceVertex) -> bool:
    """True iff some linear functional is maximized exactly at {u, v}.

    Decided by strict feasibility: c with <c,u> = <c,v> and <c,u> > <c,w>
    for every other vertex w of the slice.
    """
    if (u.m, u.n, u.k) != (v.m, v.n, v.k):
        raise DimensionMismatch(
            f"vertices live in different slices: {(u.m, u.n, u.k)}"
            f" vs {(v.m, v.n, v.k)}"
        )
    if u.perm == v.perm:
        return False
    total = u.m + u.n
    strict = [
        tuple(a - b for a, b in zip(u.perm, w))
        for w in _vertex_vectors(u.m, u.n, u.k)
        if w not in (u.perm, v.perm)
    ]
    diff = tuple(a - b for a, b in zip(u.perm, v.perm))
    weak = [diff, tuple(-d for d in diff)]
    return margin_solve(strict, weak, dim=total).feasible


@dataclass(frozen=True)
class NormalConeDescription:
    """Roots e_i - e_j (stored as (i, j)) with value gap exactly 1.

    delta_m holds the roots whose endpoints straddle the first-m block;
    membership in the cone needs every plain root positive and every
    pairwise sum from delta_m positive.
    """

    delta_plain: tuple[tuple[int, int], ...]
    delta_m: tuple[tuple[int, int], ...]


def normal_cone(v: SliceVertex) -> NormalConeDescription:
    pos = v.positions()
    plain, cross = [], []
    for t in range(1, v.m + v.n):
        i, j = pos[t], pos[t - 1]  # value t+1 sits at i, value t at j
        if (i <= v.m) != (j <= v.m):
            cross.append((i, j))
        else:
            plain.append((i, j))
    return NormalConeDescription(tuple(plain), tuple(cross))


def cone_contains(cone: NormalConeDescription, u) -> bool:
    """Exact strict membership test for the open normal cone."""
    vec = [Fraction(c) for c in u]

    def pair(i: int, j: int) -> Fraction:
        return vec[i - 1] - vec[j - 1]

    for i, j in cone.delta_plain:
        if pair(i, j) <= 0:
            return False
    for (i1, j1), (i2, j2) in combinations(cone.delta_m, 2):
        if pair(i1, j1) + pair(i2, j2) <= 0:
            return False
    return True


@dataclass(frozen=True)
class Flag:
    """Strictly increasing chain of subsets ending at the full ground set.

    parts stores F_1 through F_d as sorted tuples; the empty F_0 is
    implicit.  The face it names assigns the largest values to the first
    block, the next range to the second, and so on.
    """

    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        norm = tuple(tuple(sorted(set(p))) for p in self.parts)
        object.__setattr__(self, "parts", norm)
        if not norm:
            raise BadInput("flag needs at least the full set")
        prev: set[int] = set()
        for p in norm:
            cur = set(p)
            if not prev < cur:
                raise BadInput("flag subsets must strictly increase")
            prev = cur
        total = len(norm[-1])
        if norm[-1] != tuple(range(1, total + 1)):
            raise BadInput("last flag subset must be the full set 1..N")

    @property
    def ground_size(self) -> int:
        return len(self.parts[-1])

    def blocks(self) -> list[tuple[int, ...]]:
        prev: set[int] = set()
        out = []
        for p in self.parts:
            cur = set(p)
            out.append(tuple(sorted(cur - prev)))
            prev = cur
        return out


def _block_value_ranges(f: Flag) -> list[tuple[int, int]]:
    """Inclusive value range handed to each block, first block highest."""
    total = f.ground_size
    out = []
    hi = total
    for b in f.blocks():
        lo = hi - len(b) + 1
        out.append((lo, hi))
        hi = lo - 1
    return out


def min_max_prefix(f: Flag, m: int) -> tuple[int, int]:
    """Extreme first-m coordinate sums over the face named by the flag.

    Within each block the value range is fixed, so the extremes fill the
    block's first-m positions with its smallest, resp. largest, values.
    """
    lo_sum = hi_sum = 0
    for block, (lo, hi) in zip(f.blocks(), _block_value_ranges(f)):
        c = sum(1 for e in block if e <= m)
        lo_sum += sum(range(lo, lo + c))
        hi_sum += sum(range(hi - c + 1, hi + 1))
    return lo_sum, hi_sum


def face_dimension(f: Flag, m: int, k: int) -> int:
    """Dimension of the flag's face cut by the prefix-sum hyperplane.

    Strictly between the extreme prefix sums the hyperplane shaves one
    dimension; at an extreme it lands on a smaller face whose dimension
    counts the nonempty half-blocks.
    """
    lo, hi = min_max_prefix(f, m)
    if not lo <= k <= hi:
        raise FaceMissesHyperplane(
            f"k={k} outside the face's prefix range [{lo}, {hi}]"
        )
    total = f.ground_size
    if lo < k < hi:
        return total - len(f.parts) - 1
    halves = 0
    for block in f.blocks():
        inside = sum(1 for e in block if e <= m)
        halves += (inside > 0) + (inside < len(block))
    return total - halves


def face_vertices(f: Flag, m: int, k: int) -> list[tuple[int, ...]]:
    """Permutations of the flag's face with first-m sum k (test oracle)."""
    total = f.ground_size
    out = []

    def rec(blocks, ranges, acc):
        if not blocks:
            perm = [0] * total
            for pos, val in acc:
                perm[pos - 1] = val
            if sum(perm[:m]) == k:
                out.append(tuple(perm))
            return
        block, (lo, hi) = blocks[0], ranges[0]
        for vals in permutations(range(lo, hi + 1)):
            rec(blocks[1:], ranges[1:], acc + list(zip(block, vals)))

    rec(f.blocks(), _block_value_ranges(f), [])
    return sorted(out)


def face_dimension_oracle(f: Flag, m: int, k: int) -> int:
    """Affine dimension of the face's k-prefix vertex set, by exact rank."""
    verts = face_vertices(f, m, k)
    if not verts:
        raise FaceMissesHyperplane("no vertex attains this prefix sum")
    base = verts[0]
    diffs = [
        tuple(Fraction(a - b) for a, b in zip(w, base)) for w in verts[1:]
    ]
    return exact_rank(diffs)
