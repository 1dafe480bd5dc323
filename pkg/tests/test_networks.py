"""Slope sweeps, network enumeration, witness search, and the bounds."""

from fractions import Fraction

import pytest

from rsyt.errors import BadInput, CapExceeded, NotGeneric
from rsyt.networks import (
    PointConfiguration,
    SortingNetwork,
    enumerate_networks,
    network_count,
    network_of_points,
    saturation_enumerate,
    staircase_lower_recurrence,
    staircase_recurrence_factor,
    staircase_upper_bound,
    witness_search,
)


def fig3_config():
    return PointConfiguration(((0, 0), (1, 2), (2, 1)))


def test_network_validation_counts_swaps():
    with pytest.raises(BadInput):
        SortingNetwork(3, (2, 1))
    with pytest.raises(BadInput):
        SortingNetwork(1, ())


def test_network_validation_rejects_repeated_crossing():
    # firing the same pair twice removes the inversion it just made
    with pytest.raises(BadInput):
        SortingNetwork(3, (1, 1, 2))


def test_network_validation_rejects_bad_position():
    with pytest.raises(BadInput):
        SortingNetwork(3, (3, 1, 2))


def test_fig3_network_and_states():
    net = network_of_points(fig3_config())
    assert net.swaps == (2, 1, 2)
    assert net.states() == ((1, 2, 3), (1, 3, 2), (2, 3, 1), (3, 2, 1))
    assert net.swap_pair_sequence() == (
        frozenset({2, 3}),
        frozenset({1, 3}),
        frozenset({1, 2}),
    )


def test_two_points_single_swap():
    net = network_of_points(PointConfiguration(((0, 0), (1, 5))))
    assert net.wires == 2 and net.swaps == (1,)


def test_equal_slopes_rejected():
    with pytest.raises(NotGeneric):
        PointConfiguration(((0, 0), (1, 1), (2, 2)))


def test_equal_first_coordinates_rejected():
    with pytest.raises(NotGeneric):
        PointConfiguration(((0, 0), (0, 1), (2, 2)))


def test_rational_coordinates_accepted():
    p = PointConfiguration(
        ((Fraction(1, 2), 0), (Fraction(3, 4), 2), (2, Fraction(1, 3)))
    )
    network_of_points(p)


def test_enumeration_counts_match_staircase_hooks():
    for k in (3, 4, 5):
        nets = list(enumerate_networks(k))
        assert len(nets) == network_count(k)
        assert len(set(nets)) == len(nets)
    assert network_count(3) == 2
    assert network_count(4) == 16
    assert network_count(5) == 768


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        next(enumerate_networks(7))


def test_reflection_reverses_pair_order():
    for pts in [
        ((0, 0), (1, 2), (2, 1)),
        ((0, 3), (1, 0), (3, 5), (7, 1)),
    ]:
        a = network_of_points(PointConfiguration(pts))
        b = network_of_points(
            PointConfiguration(tuple((x, -y) for x, y in pts))
        )
        assert b.swap_pair_sequence() == tuple(
            reversed(a.swap_pair_sequence())
        )


def test_witness_search_finds_fig3_and_reverifies():
    net = network_of_points(fig3_config())
    verdict = witness_search(net, budget=1000, seed=3)
    assert verdict.realized
    assert network_of_points(verdict.config) == net


def test_witness_search_covers_both_3wire_networks():
    for net in enumerate_networks(3):
        verdict = witness_search(net, budget=1000, seed=0)
        assert verdict.realized


def test_witness_search_zero_budget_is_unknown():
    net = network_of_points(fig3_config())
    verdict = witness_search(net, budget=0, seed=0)
    assert verdict.config is None and verdict.budget_spent == 0


def test_witness_search_is_deterministic():
    net = next(enumerate_networks(4))
    a = witness_search(net, budget=400, seed=17)
    b = witness_search(net, budget=400, seed=17)
    pa = a.config.points if a.config else None
    pb = b.config.points if b.config else None
    assert pa == pb and a.budget_spent == b.budget_spent


def test_saturation_is_subset_of_enumeration():
    found = saturation_enumerate(4, budget=800, seed=2)
    assert found <= set(enumerate_networks(4))
    assert len(found) <= 16


def test_saturation_small_cases():
    assert len(saturation_enumerate(2, budget=5, seed=0)) == 1
    assert len(saturation_enumerate(3, budget=300, seed=0)) == 2


def test_upper_bound_values():
    assert staircase_upper_bound(2) == 1
    e = Fraction(27182818285, 10**10)
    assert staircase_upper_bound(3) == (4 * e) ** 6 / 6
    tighter = staircase_upper_bound(3, e_upper=Fraction(3))
    assert tighter > staircase_upper_bound(3)


def test_upper_bound_monotone_3_to_10():
    vals = [staircase_upper_bound(n) for n in range(3, 11)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_lower_recurrence_values():
    assert staircase_lower_recurrence(2) == 0
    assert staircase_lower_recurrence(3) == 6
    assert staircase_lower_recurrence(4) == Fraction(612, 5)
    assert staircase_recurrence_factor(3) == 3


def test_lower_recurrence_factors_nondecreasing():
    facs = [staircase_recurrence_factor(n) for n in range(3, 11)]
    assert all(f >= 0 for f in facs)
    assert all(a <= b for a, b in zip(facs, facs[1:]))


def test_lower_recurrence_custom_base():
    # seeding level 3 with the exhaustive value 16 lifts level 4
    assert staircase_lower_recurrence(
        4, base_n=3, base_value=16
    ) == staircase_recurrence_factor(4) * 16
