"""Census walks, extension counts, bounds, and the region cross-check."""

import random
from fractions import Fraction
from math import comb, factorial

import pytest

from rsyt.enumeration import (
    bounds,
    enumerate_realizable,
    enumerate_single_row_extensions,
    extension_count_formula,
    fixed_witness_extensions,
    hyperplane_count,
    region_count_crosscheck,
)
from rsyt.errors import CapExceeded, NotGeneric, NotRealizableError
from rsyt.realizability import (
    OuterSumWitness,
    decide_realizable,
    tableau_of_outer_sum,
)
from rsyt.tableaux import Shape, Tableau, catalan, iterate_syt


def column_order_tableau(m, n):
    rows = tuple(
        tuple(i + m * j for j in range(n)) for i in range(1, m + 1)
    )
    return Tableau(Shape.rect(m, n), rows)


def row_order_tableau(m, n):
    rows = tuple(
        tuple(n * i + j for j in range(1, n + 1)) for i in range(m)
    )
    return Tableau(Shape.rect(m, n), rows)


def test_census_2xn_is_catalan():
    for n in range(2, 6):
        rep = enumerate_realizable(2, n)
        assert rep.realizable_count == catalan(n)
        assert rep.total_count == catalan(n)


def test_census_pruned_equals_unpruned():
    for m, n in [(2, 4), (3, 3)]:
        a = enumerate_realizable(m, n, prune=True)
        b = enumerate_realizable(m, n, prune=False)
        assert a.realizable_count == b.realizable_count


def test_census_3x3_value():
    rep = enumerate_realizable(3, 3)
    assert (rep.realizable_count, rep.total_count) == (36, 42)


def test_census_parallel_matches_serial():
    serial = enumerate_realizable(3, 4, prune=False)
    par = enumerate_realizable(3, 4, prune=False, jobs=3)
    assert par.realizable_count == serial.realizable_count == 295


def test_census_collects_nonrealizable_in_stream_order(
    paper_3x3_nonrealizable,
):
    rep = enumerate_realizable(3, 3, collect_nonrealizable=True)
    assert len(rep.nonrealizable) == 42 - 36
    assert paper_3x3_nonrealizable in rep.nonrealizable
    seqs = [t.row_sequence() for t in rep.nonrealizable]
    assert seqs == sorted(seqs)
    unpruned = enumerate_realizable(
        3, 3, prune=False, collect_nonrealizable=True
    )
    assert rep.nonrealizable == unpruned.nonrealizable


def test_census_nonrealizable_all_fail_decision():
    rep = enumerate_realizable(3, 3, collect_nonrealizable=True)
    for t in rep.nonrealizable:
        assert not decide_realizable(t).realizable


def test_census_cap():
    with pytest.raises(CapExceeded):
        enumerate_realizable(5, 5)
    with pytest.raises(ValueError):
        enumerate_realizable(0, 3)


def test_extension_formula_anchors(fig1_tableau):
    assert extension_count_formula(fig1_tableau) == 23
    # column order minimizes the bottom row, row order maximizes it
    for m, n in [(2, 3), (3, 4), (2, 5)]:
        assert extension_count_formula(column_order_tableau(m, n)) == (
            comb(n, 2) * m + 1
        )
        assert extension_count_formula(row_order_tableau(m, n)) == (
            comb(n, 2) + 1
        )


def random_generic_witness(rng, r, n):
    while True:
        xs = sorted(rng.sample(range(1, 600), r))
        ys = sorted(rng.sample(range(1, 600), n))
        w = OuterSumWitness(
            tuple(Fraction(v, rng.randint(1, 5)) for v in xs),
            tuple(Fraction(v, rng.randint(1, 5)) for v in ys),
        )
        if all(a < b for a, b in zip(w.x, w.x[1:])) and all(
            a < b for a, b in zip(w.y, w.y[1:])
        ):
            return w


def test_fixed_witness_extensions_match_formula():
    rng = random.Random(41)
    done = 0
    while done < 30:
        w = random_generic_witness(rng, rng.randint(1, 4), rng.randint(2, 5))
        try:
            exts = fixed_witness_extensions(w)
        except NotGeneric:
            continue
        base = tableau_of_outer_sum(w)
        assert len(exts) == extension_count_formula(base)
        done += 1


def test_fixed_witness_extensions_preserve_base_order():
    rng = random.Random(8)
    while True:
        w = random_generic_witness(rng, 2, 4)
        try:
            exts = fixed_witness_extensions(w)
            break
        except NotGeneric:
            continue
    base = tableau_of_outer_sum(w)
    for e in exts:
        ranks = sorted(
            (v, i, j)
            for i, row in enumerate(e.rows[:2])
            for j, v in enumerate(row)
        )
        expect = sorted(
            (v, i, j) for i, row in enumerate(base.rows) for j, v in enumerate(row)
        )
        assert [r[1:] for r in ranks] == [r[1:] for r in expect]


def test_fixed_witness_rejects_critical_collision():
    # x2 + (y2 - y1) hits x1 + (y3 - y1) when x2 - x1 = y3 - y2
    w = OuterSumWitness((0, 1), (0, 5, 6))
    with pytest.raises(NotGeneric):
        fixed_witness_extensions(w)


def test_single_row_extensions_all_realizable_and_distinct():
    base = column_order_tableau(2, 3)
    exts = enumerate_single_row_extensions(base)
    assert len(exts) == len(set(e.rows for e in exts))
    for e in exts:
        assert e.shape.m == 3
        assert decide_realizable(e).realizable


def test_single_row_extensions_match_brute_force():
    base = row_order_tableau(2, 3)
    exts = {e.rows for e in enumerate_single_row_extensions(base)}

    def first_rows_match(t):
        cells = sorted(
            (v, i, j)
            for i, row in enumerate(t.rows[:2])
            for j, v in enumerate(row)
        )
        want = sorted(
            (v, i, j)
            for i, row in enumerate(base.rows)
            for j, v in enumerate(row)
        )
        return [c[1:] for c in cells] == [w[1:] for w in want]

    brute = {
        t.rows
        for t in iterate_syt(Shape.rect(3, 3))
        if first_rows_match(t) and decide_realizable(t).realizable
    }
    assert exts == brute


def test_single_row_extensions_require_realizable_base(
    paper_3x3_nonrealizable,
):
    with pytest.raises(NotRealizableError):
        enumerate_single_row_extensions(paper_3x3_nonrealizable)


def test_single_row_extensions_cap():
    with pytest.raises(CapExceeded):
        enumerate_single_row_extensions(column_order_tableau(4, 5))


def test_bounds_2x2_values():
    b = bounds(2, 2)
    assert b.upper == 4
    assert b.lower == 2
    assert b.syt_total == 2
    assert b.ratio_upper == 2


def test_bounds_3x3_values():
    b = bounds(3, 3)
    assert b.upper == Fraction(190051, 36)
    assert b.lower == 36  # exact census value from the bundled cache
    assert b.syt_total == 42


def test_bounds_1xn_lower_is_one():
    for n in (1, 4, 9):
        assert bounds(1, n).lower == 1


def test_bounds_monotone_growth_in_n():
    uppers = [bounds(n, n).upper for n in range(1, 11)]
    lowers = [bounds(n, n).lower for n in range(1, 11)]
    assert all(a < b for a, b in zip(uppers, uppers[1:]))
    assert all(a <= b for a, b in zip(lowers, lowers[1:]))


def test_hyperplane_count_values():
    assert hyperplane_count(2, 2) == 4
    assert hyperplane_count(3, 3) == 24
    assert hyperplane_count(3, 5) == 2 * 3 * 10 + 3 + 10


def test_region_counts_match_census_product():
    assert region_count_crosscheck(1, 2) == 2
    assert region_count_crosscheck(2, 2) == 8
    assert region_count_crosscheck(2, 3) == 60
    assert region_count_crosscheck(2, 3) == (
        factorial(2) * factorial(3) * enumerate_realizable(2, 3).realizable_count
    )


def test_region_cap():
    with pytest.raises(CapExceeded):
        region_count_crosscheck(3, 4)
