"""Ribbon graphs: boundary circles, Euler data, chord-diagram thickening."""

import pytest

from weightsys.diagrams import ChordDiagram, complete_diagram, enumerate_diagrams
from weightsys.graphs import f2_rank
from weightsys.ribbon import (
    RibbonGraph,
    UnknownEdge,
    boundary_components,
    chord_diagram_to_ribbon,
    euler_genus_data,
    spanning_subgraph,
)

LOOP = RibbonGraph([(0, 1)], [(0, 1, 0)])
TWISTED_LOOP = RibbonGraph([(0, 1)], [(0, 1, 1)])
BRIDGE = RibbonGraph([(0,), (1,)], [(0, 1, 0)])
THETA = RibbonGraph([(0, 1), (2, 3)], [(0, 2, 0), (1, 3, 0)])
TORUS_BOUQUET = RibbonGraph([(0, 1, 2, 3)], [(0, 2, 0), (1, 3, 0)])


def test_construction_validates_half_edges():
    with pytest.raises(AssertionError):
        RibbonGraph([(0, 0)], [])  # half-edge attached twice
    with pytest.raises(AssertionError):
        RibbonGraph([(0,)], [(0, 1, 0)])  # dangling half-edge


def test_counts():
    assert THETA.vertex_count() == 2
    assert THETA.edge_count() == 2
    assert THETA.component_count() == 1
    assert LOOP.component_count() == 1


def test_boundary_circles_of_the_standard_examples():
    assert boundary_components(LOOP) == 2  # annulus
    assert boundary_components(TWISTED_LOOP) == 1  # Moebius band
    assert boundary_components(BRIDGE) == 1
    assert boundary_components(THETA) == 2
    assert boundary_components(TORUS_BOUQUET) == 1


def test_euler_genus_data():
    # components, V, E, boundary; for untwisted surfaces
    # V - E + boundary = 2*components - 2*genus
    comp, v, e, b = euler_genus_data(TORUS_BOUQUET)
    assert (comp, v, e, b) == (1, 1, 2, 1)
    assert v - e + b == 2 * comp - 2 * 1  # genus one
    comp, v, e, b = euler_genus_data(LOOP)
    assert v - e + b == 2 * comp  # genus zero
    comp, v, e, b = euler_genus_data(THETA)
    assert v - e + b == 2 * comp  # genus zero


def test_isolated_vertex_contributes_one_boundary_circle():
    r = RibbonGraph([(0, 1), ()], [(0, 1, 0)])
    assert boundary_components(r) == 3


def test_spanning_subgraph():
    sub = spanning_subgraph(THETA, [0])
    assert sub.edge_count() == 1
    assert boundary_components(sub) == 1  # a bridge
    empty = spanning_subgraph(THETA, [])
    assert empty.edge_count() == 0
    assert boundary_components(empty) == 2  # two bare disks
    with pytest.raises(UnknownEdge):
        spanning_subgraph(THETA, [5])


def test_chord_diagram_thickening_small_cases():
    # one crossing pair: the surface is a torus with one boundary circle
    k2 = chord_diagram_to_ribbon(complete_diagram(2))
    assert euler_genus_data(k2) == (1, 1, 2, 1)
    # two parallel chords: three boundary circles, genus zero
    par = chord_diagram_to_ribbon(ChordDiagram((1, 1, 2, 2)))
    assert boundary_components(par) == 3


def test_boundary_count_equals_corank_of_adjacency():
    # boundary circles of the thickened diagram = n + 1 - rank_F2(A)
    # where A is the framed adjacency matrix of the intersection graph
    for n in range(1, 5):
        for d in enumerate_diagrams(n, framed=True):
            r = chord_diagram_to_ribbon(d)
            g = d.intersection_graph()
            assert boundary_components(r) == n + 1 - f2_rank(g.rows, g.n), d.word


def test_twist_changes_boundary_parity_on_a_loop():
    # adding a half-twist to the loop merges its two boundary circles
    assert boundary_components(LOOP) - boundary_components(TWISTED_LOOP) == 1


def test_json_roundtrip():
    assert RibbonGraph.from_json(THETA.to_json()).edges == THETA.edges
    assert RibbonGraph.from_json(THETA.to_json()).vertices == THETA.vertices
