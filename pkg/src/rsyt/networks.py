"""Sorting networks on k wires and exact slope-sweep realizability.

A sorting network records, step by step, which adjacent pair of tracks
crosses while the identity arrangement is sorted into its reverse.  A
generic planar point set induces one: sweep a direction vector through a
half-turn and record the order in which pairs of points exchange rank
under the dot product.  The exchange order is the slope order of the
connecting segments, so everything here stays in rational arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from hashlib import sha256
from math import comb, factorial

from .errors import BadInput, CapExceeded, NotGeneric
from .tableaux import Shape, hook_length_count

MAX_WIRES = 6


@dataclass(frozen=True)
class SortingNetwork:
    """Swap positions, applied left to right to the identity arrangement.

    swaps[s] = p means the occupants of tracks p and p+1 cross at step s.
    Each step must create exactly one new inversion, which forces the final
    arrangement to be the reversal.
    """

    wires: int
    swaps: tuple[int, ...]

    def __post_init__(self):
        k = self.wires
        if k < 2:
            raise BadInput("a network needs at least 2 wires")
        if len(self.swaps) != comb(k, 2):
            raise BadInput(
                f"expected {comb(k, 2)} swaps for {k} wires, got {len(self.swaps)}"
            )
        word = list(range(1, k + 1))
        for s, p in enumerate(self.swaps):
            if not 1 <= p <= k - 1:
                raise BadInput(f"swap {s} at position {p} is off the tracks")
            if word[p - 1] > word[p]:
                raise BadInput(
                    f"swap {s} at position {p} repeats a crossing"
                )
            word[p - 1], word[p] = word[p], word[p - 1]
        assert word == list(range(k, 0, -1))

    def swap_pair_sequence(self) -> tuple[frozenset[int], ...]:
        """The label pair crossing at each step."""
        word = list(range(1, self.wires + 1))
        out = []
        for p in self.swaps:
            out.append(frozenset((word[p - 1], word[p])))
            word[p - 1], word[p] = word[p], word[p - 1]
        return tuple(out)

    def states(self) -> tuple[tuple[int, ...], ...]:
        """Track of each label before/after every step (rank vectors)."""
        word = list(range(1, self.wires + 1))
        out = []

        def ranks():
            r = [0] * self.wires
            for pos, lab in enumerate(word, start=1):
                r[lab - 1] = pos
            return tuple(r)

        out.append(ranks())
        for p in self.swaps:
            word[p - 1], word[p] = word[p], word[p - 1]
            out.append(ranks())
        return tuple(out)


Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PointConfiguration:
    """Planar points with distinct first coordinates and pairwise slopes."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(
            (Fraction(x), Fraction(y)) for x, y in self.points
        )
        object.__setattr__(self, "points", pts)
        seen_x: dict[Fraction, int] = {}
        for idx, (x, _) in enumerate(pts):
            if x in seen_x:
                raise NotGeneric(
                    "two points share a first coordinate",
                    colliding=[seen_x[x] + 1, idx + 1],
                )
            seen_x[x] = idx
        slopes: dict[Fraction, tuple[int, int]] = {}
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                s = (pts[b][1] - pts[a][1]) / (pts[b][0] - pts[a][0])
                if s in slopes:
                    raise NotGeneric(
                        "two point pairs share a slope",
                        colliding=[slopes[s], (a + 1, b + 1)],
                    )
                slopes[s] = (a + 1, b + 1)

    @property
    def k(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class RealizabilityVerdict:
    config: PointConfiguration | None
    budget_spent: int

    @property
    def realized(self) -> bool:
        return self.config is not None


def network_of_points(p: PointConfiguration) -> SortingNetwork:
    """The sorting network swept out by a generic configuration.

    Labels follow increasing first coordinate.  Pairs fire in increasing
    slope order; when a pair fires its labels sit on adjacent tracks, and
    the left track index is recorded.
    """
    pts = sorted(p.points)
    k = len(pts)
    if k < 2:
        raise BadInput("need at least 2 points")
    pairs = []
    for a in range(k):
        for b in range(a + 1, k):
            s = (pts[b][1] - pts[a][1]) / (pts[b][0] - pts[a][0])
            pairs.append((s, a + 1, b + 1))
    pairs.sort()
    word = list(range(1, k + 1))
    swaps = []
    for _, a, b in pairs:
        pa, pb = word.index(a), word.index(b)
        if pa > pb:
            pa, pb = pb, pa
        assert pb == pa + 1, "firing pair must be adjacent"
        swaps.append(pa + 1)
        word[pa], word[pb] = word[pb], word[pa]
    return SortingNetwork(k, tuple(swaps))


def enumerate_networks(k: int, cap: int = MAX_WIRES):
    """Every sorting network on k wires, in lexicographic swap order."""
    if k > cap:
        raise CapExceeded(k, cap, what="wires")
    if k < 2:
        raise BadInput("a network needs at least 2 wires")
    total = comb(k, 2)
    word = list(range(1, k + 1))
    swaps: list[int] = []

    def rec():
        if len(swaps) == total:
            yield SortingNetwork(k, tuple(swaps))
            return
        for p in range(1, k):
            if word[p - 1] < word[p]:
                word[p - 1], word[p] = word[p], word[p - 1]
                swaps.append(p)
                yield from rec()
                swaps.pop()
                word[p - 1], word[p] = word[p], word[p - 1]

    yield from rec()


def network_count(k: int) -> int:
    """Closed-form count: standard fillings of the staircase (1..k-1)."""
    return hook_length_count(Shape.staircase(k - 1))


def _stream(seed: int, net: SortingNetwork) -> random.Random:
    # stable per-network stream so concurrent searches stay reproducible
    digest = sha256(
        f"{seed}:{net.wires}:{','.join(map(str, net.swaps))}".encode()
    ).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _sample_config(
    rng: random.Random, k: int, grid: int
) -> PointConfiguration | None:
    for _ in range(200):
        pts = tuple(
            (Fraction(rng.randint(0, grid)), Fraction(rng.randint(0, grid)))
            for _ in range(k)
        )
        try:
            return PointConfiguration(pts)
        except NotGeneric:
            continue
    return None


def _disagreement(net: SortingNetwork, cand: PointConfiguration) -> int:
    got = network_of_points(cand)
    return sum(1 for a, b in zip(net.swaps, got.swaps) if a != b)


def witness_search(
    net: SortingNetwork, budget: int, seed: int = 0, grid: int = 3
) -> RealizabilityVerdict:
    """Look for a point configuration sweeping out exactly this network.

    Random integer-grid starts alternate with first-improvement hill
    climbing on the number of disagreeing swap steps.  Every evaluated
    configuration costs one trial.  A returned witness re-verifies by
    construction; exhausting the budget proves nothing.
    """
    rng = _stream(seed, net)
    k = net.wires
    spent = 0
    restarts = 0
    g = grid

    def evaluate(cand: PointConfiguration | None) -> int | None:
        nonlocal spent
        if cand is None:
            return None
        spent += 1
        return _disagreement(net, cand)

    while spent < budget:
        cur = _sample_config(rng, k, g)
        d = evaluate(cur)
        if d is None:
            restarts += 1
            g *= 2
            continue
        if d == 0:
            return RealizabilityVerdict(cur, spent)
        improved = True
        while improved and spent < budget:
            improved = False
            for i in range(k):
                for coord in (0, 1):
                    for delta in (1, -1):
                        pts = [list(pt) for pt in cur.points]
                        v = pts[i][coord] + delta
                        if not 0 <= v <= g:
                            continue
                        pts[i][coord] = v
                        try:
                            cand = PointConfiguration(
                                tuple((a, b) for a, b in pts)
                            )
                        except NotGeneric:
                            continue
                        nd = evaluate(cand)
                        if nd == 0:
                            return RealizabilityVerdict(cand, spent)
                        if nd < d:
                            cur, d = cand, nd
                            improved = True
                            break
                        if spent >= budget:
                            break
                    if improved or spent >= budget:
                        break
                if improved or spent >= budget:
                    break
        restarts += 1
        if restarts % 8 == 0:
            g *= 2
    return RealizabilityVerdict(None, spent)


def saturation_enumerate(
    k: int, budget: int, seed: int = 0, grid: int = 3
) -> set[SortingNetwork]:
    """Networks observed over sampled generic configurations.

    A lower-bound harvest: every returned network is realizable, but
    sampling can never certify that a missing one is not.
    """
    if k > MAX_WIRES:
        raise CapExceeded(k, MAX_WIRES, what="wires")
    digest = sha256(f"{seed}:saturate:{k}".encode()).digest()
    rng = random.Random(int.from_bytes(digest[:8], "big"))
    found: set[SortingNetwork] = set()
    g = grid
    for trial in range(budget):
        if trial and trial % 64 == 0:
            g *= 2
        cand = _sample_config(rng, k, g)
        if cand is None:
            g *= 2
            continue
        found.add(network_of_points(cand))
    return found


def staircase_upper_bound(
    n: int, e_upper: Fraction = Fraction(27182818285, 10**10)
) -> Fraction:
    """Region-count bound (4 e D N / k)^k / n! with D=2, k=2n.

    N counts the degree-2 curves separating sweep orders.  The value is a
    rigorous bound only when e_upper is at least Euler's number; the
    default is a decimal approximation from above.  For n=2 there are no
    curves at all and the single region gives 1.
    """
    if n < 2:
        raise BadInput("n >= 2 required")
    big_n = comb(comb(n, 2), 2)
    if big_n == 0:
        return Fraction(1)
    k = 2 * n
    return (Fraction(4) * e_upper * 2 * big_n / k) ** k / factorial(n)


def staircase_recurrence_factor(n: int) -> Fraction:
    """Per-step growth factor of the lower-bound recurrence."""
    total = sum(2 * (i - 1) * comb(comb(i, 2), 2) for i in range(1, n + 1))
    return Fraction(total, n + 1)


def staircase_lower_recurrence(
    n: int, base_n: int = 2, base_value: int = 2
) -> Fraction:
    """Lower bound on the realizable staircase count via one-step growth.

    Iterates count(i) >= factor(i) * count(i-1) from level n down to the
    supplied base (default: both 3-wire networks have explicit witnesses,
    so the level-2 count is exactly 2).  The factor always applies at the
    top level, so the degenerate n=2 evaluation is factor(2) * 1 = 0; the
    base seeds levels strictly below the top, with 1 as the floor.
    """
    if n < 2:
        raise BadInput("n >= 2 required")

    def value(i: int) -> Fraction:
        if i == base_n:
            return Fraction(base_value)
        if i <= 1:
            return Fraction(1)
        return staircase_recurrence_factor(i) * value(i - 1)

    return staircase_recurrence_factor(n) * value(n - 1)
