"""Exact simplex kernel and the strict-feasibility margin reduction."""

import random
from fractions import Fraction

import pytest

from rsyt.linprog import exact_rank, margin_solve, simplex_max


def test_simplex_solves_a_textbook_lp():
    # max 3a + 2b st a + b <= 4, a <= 2, b <= 3
    opt, point, duals = simplex_max(
        [[1, 1], [1, 0], [0, 1]],
        [4, 2, 3],
        [3, 2],
    )
    assert opt == Fraction(10)
    assert point == [Fraction(2), Fraction(2)]
    assert all(d >= 0 for d in duals)


def test_simplex_handles_degenerate_ties():
    opt, point, _ = simplex_max(
        [[1, 0], [1, 0], [0, 1]],
        [1, 1, 1],
        [1, 1],
    )
    assert opt == 2
    assert point == [Fraction(1), Fraction(1)]


def test_simplex_detects_unbounded():
    with pytest.raises(ArithmeticError):
        simplex_max([[-1, 0]], [0], [1, 0])


def test_margin_feasible_system_returns_strict_point():
    res = margin_solve([(1, -1), (0, 1)], dim=2)
    assert res.feasible
    assert res.margin == 1
    x = res.point
    assert x[0] - x[1] > 0 and x[1] > 0


def test_margin_infeasible_system_returns_multipliers():
    # v > 0 and -v > 0 cannot hold together
    res = margin_solve([(1,), (-1,)], dim=1)
    assert not res.feasible
    lam = res.strict_multipliers
    assert sum(lam) > 0 and all(v >= 0 for v in lam)
    assert lam[0] - lam[1] == 0


def test_margin_is_always_zero_or_one_on_homogeneous_systems():
    rng = random.Random(11)
    for _ in range(60):
        dim = rng.randint(1, 4)
        rows = [
            tuple(rng.randint(-2, 2) for _ in range(dim))
            for _ in range(rng.randint(1, 6))
        ]
        rows = [r for r in rows if any(r)] or [(1,) * dim]
        res = margin_solve(rows, dim=dim)
        assert res.margin in (0, 1)
        if res.feasible:
            assert all(
                sum(c * v for c, v in zip(row, res.point)) >= 1
                for row in rows
            )


def test_margin_weak_rows_hold_at_equality_when_paired():
    eq = (1, -1)
    res = margin_solve([(1, 0)], weak=[eq, tuple(-c for c in eq)], dim=2)
    assert res.feasible
    assert res.point[0] == res.point[1]


def test_margin_rejects_dimension_mismatch():
    with pytest.raises(ValueError):
        margin_solve([(1, 0)], dim=1)


def test_exact_rank_small_cases():
    assert exact_rank([]) == 0
    assert exact_rank([(0, 0)]) == 0
    assert exact_rank([(1, 2), (2, 4)]) == 1
    assert exact_rank([(1, 0, 1), (0, 1, 1), (1, 1, 2)]) == 2
    rows = [
        (Fraction(1, 2), Fraction(1, 3)),
        (Fraction(1, 4), Fraction(1, 5)),
    ]
    assert exact_rank(rows) == 2
