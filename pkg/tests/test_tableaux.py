"""Shapes, validation, canonical iteration, and counting."""

import random

import pytest

from rsyt.errors import CapExceeded, NotABijection, NotIncreasing
from rsyt.tableaux import (
    Shape,
    Tableau,
    catalan,
    hook_length_count,
    iterate_syt,
    validate_tableau,
)


def test_rect_shape_geometry():
    s = Shape.rect(3, 5)
    assert s.cell_count() == 15
    assert s.row_lengths() == (5, 5, 5)
    assert s.first_col(2) == 1
    assert list(s.cells())[:6] == [(1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 1)]


def test_staircase_shape_is_right_justified():
    # row i has length i and ends in the common last column
    s = Shape.staircase(3)
    assert s.cell_count() == 6
    assert s.row_lengths() == (1, 2, 3)
    assert [s.first_col(i) for i in (1, 2, 3)] == [3, 2, 1]
    assert s.contains(1, 3) and not s.contains(1, 1)


def test_validate_accepts_fig1(fig1_tableau):
    t = validate_tableau(fig1_tableau.shape, fig1_tableau.rows)
    assert t.rows == fig1_tableau.rows


def test_validate_accepts_single_row():
    validate_tableau(Shape.rect(1, 6), ((1, 2, 3, 4, 5, 6),))


def test_validate_accepts_column_order_2x2():
    validate_tableau(Shape.rect(2, 2), ((1, 3), (2, 4)))


def test_validate_rejects_non_bijection():
    with pytest.raises(NotABijection):
        validate_tableau(Shape.rect(2, 2), ((1, 1), (2, 4)))


def test_validate_reports_first_row_violation():
    with pytest.raises(NotIncreasing) as info:
        validate_tableau(Shape.rect(2, 2), ((2, 1), (3, 4)))
    assert info.value.kind == "row"
    assert info.value.cell == (1, 1)


def test_validate_reports_first_col_violation():
    with pytest.raises(NotIncreasing) as info:
        validate_tableau(Shape.rect(2, 2), ((3, 4), (1, 2)))
    assert info.value.kind == "col"
    assert info.value.cell == (1, 1)


def test_hook_counts_match_known_values():
    assert hook_length_count(Shape.rect(3, 3)) == 42
    assert hook_length_count(Shape.rect(2, 5)) == 42
    assert hook_length_count(Shape.rect(1, 9)) == 1
    assert hook_length_count(Shape.staircase(2)) == 2
    assert hook_length_count(Shape.staircase(3)) == 16
    assert hook_length_count(Shape.staircase(4)) == 768


def test_catalan_values():
    assert [catalan(n) for n in range(1, 8)] == [1, 2, 5, 14, 42, 132, 429]
    for n in range(2, 8):
        assert hook_length_count(Shape.rect(2, n)) == catalan(n)


@pytest.mark.parametrize(
    "shape",
    [
        Shape.rect(1, 4),
        Shape.rect(2, 3),
        Shape.rect(3, 3),
        Shape.rect(2, 6),
        Shape.rect(4, 3),
        Shape.staircase(2),
        Shape.staircase(3),
        Shape.staircase(4),
    ],
)
def test_iteration_count_matches_hook_formula(shape):
    seen = list(iterate_syt(shape))
    assert len(seen) == hook_length_count(shape)
    assert len(set(t.rows for t in seen)) == len(seen)
    for t in seen[:: max(1, len(seen) // 17)]:
        validate_tableau(shape, t.rows)


def test_iteration_order_is_lex_on_row_sequences():
    seqs = [t.row_sequence() for t in iterate_syt(Shape.rect(3, 3))]
    assert seqs == sorted(seqs)


def test_iteration_cap():
    with pytest.raises(CapExceeded) as info:
        next(iterate_syt(Shape.rect(6, 5)))
    assert info.value.needed == 30


def test_row_prefix_partitions_the_stream():
    shape = Shape.rect(3, 3)
    whole = [t.rows for t in iterate_syt(shape)]
    split = []
    for first in (1, 2, 3):
        split.extend(
            t.rows for t in iterate_syt(shape, row_prefix=(1, first))
        )
    assert split == whole


def test_transpose_round_trip():
    rng = random.Random(3)
    tableaux = list(iterate_syt(Shape.rect(3, 4)))
    for t in rng.sample(tableaux, 25):
        tt = t.transpose()
        validate_tableau(tt.shape, tt.rows)
        assert tt.transpose().rows == t.rows


def test_entry_addressing_matches_rows(fig1_tableau):
    assert fig1_tableau.entry(1, 1) == 1
    assert fig1_tableau.entry(3, 5) == 15
    assert fig1_tableau.entry(2, 3) == 6


def test_staircase_entry_uses_geometric_columns():
    t = next(iterate_syt(Shape.staircase(2)))
    # shortest row sits at the top right; its only cell is column 2
    assert t.entry(1, 2) == t.rows[0][0]
