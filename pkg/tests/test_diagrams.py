"""The SVG pictures, checked by reading their embedded data back."""

import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from rsyt.diagrams import (
    render_lattice_path,
    render_line_diagram,
    render_projection_diagram,
    render_wiring_diagram,
)
from rsyt.errors import NotGeneric
from rsyt.networks import PointConfiguration, network_of_points
from rsyt.realizability import OuterSumWitness, tableau_of_outer_sum
from rsyt.slices import SliceVertex, lattice_path_of_vertex

SVG = "{http://www.w3.org/2000/svg}"


def paper_witness():
    return OuterSumWitness((0, 2, 9), (0, 1, 5, 15, 16))


def parse(svg: str) -> ET.Element:
    return ET.fromstring(svg)


def test_projection_ranks_read_back_as_the_tableau():
    w = paper_witness()
    t = tableau_of_outer_sum(w)
    root = parse(render_projection_diagram(w))
    points = [
        el
        for el in root.iter(f"{SVG}circle")
        if "grid-point" in el.get("class", "")
    ]
    assert len(points) == 15
    by_rank = {}
    for el in points:
        i, j = int(el.get("data-i")), int(el.get("data-j"))
        by_rank[int(el.get("data-rank"))] = (i, j)
        assert Fraction(el.get("data-sum")) == w.x[i - 1] + w.y[j - 1]
    for rank, (i, j) in by_rank.items():
        assert t.entry(i, j) == rank
    # feet sorted along the diagonal agree with the rank order
    feet = [
        el for el in root.iter(f"{SVG}circle") if el.get("class") == "foot"
    ]
    feet.sort(key=lambda el: Fraction(el.get("data-sum")))
    assert [int(el.get("data-rank")) for el in feet] == list(range(1, 16))


def test_projection_single_point():
    root = parse(render_projection_diagram(OuterSumWitness((0,), (0,))))
    points = [
        el
        for el in root.iter(f"{SVG}circle")
        if "grid-point" in el.get("class", "")
    ]
    assert len(points) == 1


def test_projection_rejects_non_generic():
    with pytest.raises(NotGeneric):
        render_projection_diagram(OuterSumWitness((0, 1), (0, 1)))


def test_line_diagram_reading_order_is_row_sequence():
    w = paper_witness()
    t = tableau_of_outer_sum(w)
    root = parse(render_line_diagram(w))
    points = [
        el
        for el in root.iter(f"{SVG}circle")
        if "sum-point" in el.get("class", "")
    ]
    points.sort(key=lambda el: Fraction(el.get("data-sum")))
    assert [int(el.get("data-i")) for el in points] == list(t.row_sequence())
    assert [int(el.get("data-rank")) for el in points] == list(range(1, 16))


def test_line_diagram_styles_by_column_links_by_row():
    w = OuterSumWitness((0, 10), (0, 1, 3))
    root = parse(render_line_diagram(w))
    links = [el for el in root.iter(f"{SVG}polyline")]
    row_links = [el for el in links if el.get("class") == "row-link"]
    assert sorted(el.get("data-i") for el in row_links) == ["1", "2"]
    points = [
        el
        for el in root.iter(f"{SVG}circle")
        if "sum-point" in el.get("class", "")
    ]
    classes = {el.get("data-j"): el.get("class") for el in points}
    assert "col-1" in classes["1"] and "col-3" in classes["3"]


def test_line_diagram_single_row_in_order():
    w = OuterSumWitness((5,), (0, 2, 7, 11))
    root = parse(render_line_diagram(w))
    points = [
        el
        for el in root.iter(f"{SVG}circle")
        if "sum-point" in el.get("class", "")
    ]
    points.sort(key=lambda el: Fraction(el.get("data-sum")))
    assert [int(el.get("data-rank")) for el in points] == [1, 2, 3, 4]


def test_wiring_diagram_crossings_in_firing_order():
    net = network_of_points(PointConfiguration(((0, 0), (1, 2), (2, 1))))
    root = parse(render_wiring_diagram(net))
    crossings = [
        el for el in root.iter(f"{SVG}circle") if el.get("class") == "crossing"
    ]
    crossings.sort(key=lambda el: int(el.get("data-step")))
    assert [int(el.get("data-pos")) for el in crossings] == [2, 1, 2]
    wires = [
        el for el in root.iter(f"{SVG}polyline") if el.get("class") == "wire"
    ]
    assert len(wires) == 3


def test_wiring_diagram_two_wires():
    from rsyt.networks import SortingNetwork

    root = parse(render_wiring_diagram(SortingNetwork(2, (1,))))
    crossings = [
        el for el in root.iter(f"{SVG}circle") if el.get("class") == "crossing"
    ]
    assert len(crossings) == 1


def test_lattice_path_labels_and_area():
    v = SliceVertex((4, 1, 6, 2, 7, 8, 3, 9, 5), 5, 4, 20)
    path = lattice_path_of_vertex(v)
    root = parse(render_lattice_path(path))
    group = root.find(f"{SVG}g")
    assert group.get("data-area") == "5"
    labels = [
        el for el in root.iter(f"{SVG}text") if el.get("class") == "step-label"
    ]
    labels.sort(key=lambda el: int(el.get("data-index")))
    assert len(labels) == 9
    got = [(el.get("data-dir"), int(el.get("data-label"))) for el in labels]
    assert got == list(path.steps)


def test_renderings_are_deterministic():
    w = paper_witness()
    assert render_projection_diagram(w) == render_projection_diagram(w)
    assert render_line_diagram(w) == render_line_diagram(w)
