"""Framed graphs: canonical forms, enumeration, Vassiliev moves."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weightsys.graphs import (
    BoundExceeded,
    FramedGraph,
    NotAnEdge,
    aut_order,
    canonical_form,
    enumerate_graphs,
    f2_rank,
    first_move,
    graph_4t_quadruple,
    nondegeneracy,
    pivot,
    relabel,
    second_move,
    second_move_matrix_check,
)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def test_standard_constructors():
    k4 = FramedGraph.complete(4)
    assert k4.edge_count() == 6
    assert all(k4.degree(v) == 3 for v in range(4))
    p4 = FramedGraph.path(4)
    assert p4.edge_count() == 3
    assert sorted(p4.degree(v) for v in range(4)) == [1, 1, 2, 2]
    c5 = FramedGraph.cycle(5)
    assert c5.edge_count() == 5
    assert all(c5.degree(v) == 2 for v in range(5))
    assert FramedGraph.empty(3).edge_count() == 0


def test_from_edges_and_adjacency():
    g = FramedGraph.from_edges(3, [(0, 1), (1, 2)])
    assert g.adjacent(0, 1) and g.adjacent(1, 2) and not g.adjacent(0, 2)
    assert g.is_connected()
    h = g.delete_edge(1, 2)
    assert not h.adjacent(1, 2)
    assert h.components() == [[0, 1], [2]]


def test_framing_and_weights():
    g = FramedGraph.from_edges(2, [(0, 1)], framing=[1, 0])
    assert g.framing_vector() == (1, 0)
    assert g.weights == (1, 1)


def test_induced_and_contract():
    k4 = FramedGraph.complete(4)
    assert canonical_form(k4.induced([0, 2, 3])) == canonical_form(
        FramedGraph.complete(3)
    )
    c4 = FramedGraph.cycle(4)
    c = c4.contract_edge(0, 1)
    assert c.n == 3 and c.edge_count() == 3  # a triangle
    assert sorted(c.weights) == [1, 1, 2]  # merged vertex keeps both weights


def test_disjoint_union():
    g = FramedGraph.complete(2).disjoint_union(FramedGraph.empty(1))
    assert g.n == 3 and g.edge_count() == 1
    assert not g.is_connected()


def test_json_roundtrip():
    g = FramedGraph.from_edges(3, [(0, 2)], framing=[1, 0, 1])
    assert FramedGraph.from_json(g.to_json()) == g


# ---------------------------------------------------------------------------
# F2 linear algebra
# ---------------------------------------------------------------------------


def test_f2_rank():
    assert f2_rank([0b11, 0b10, 0b01], 2) == 2
    assert f2_rank([0b101, 0b011, 0b110], 3) == 2  # rows sum to zero
    assert f2_rank([], 3) == 0


def test_nondegeneracy_small_cases():
    assert nondegeneracy(FramedGraph.empty(0)) == 1
    assert nondegeneracy(FramedGraph.empty(1)) == 0
    assert nondegeneracy(FramedGraph.complete(2)) == 1
    # odd vertex count with zero framing is always degenerate
    for _g, _aut in enumerate_graphs(3):
        assert nondegeneracy(_g) == 0
    for _g, _aut in enumerate_graphs(5):
        assert nondegeneracy(_g) == 0


# ---------------------------------------------------------------------------
# canonical forms and enumeration
# ---------------------------------------------------------------------------


def test_canonical_form_is_idempotent():
    for g, _aut in enumerate_graphs(4):
        assert canonical_form(canonical_form(g)) == canonical_form(g)


@given(st.permutations(list(range(5))))
@settings(max_examples=50, deadline=None)
def test_canonical_form_isomorphism_invariant(perm):
    g = FramedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_aut_orders():
    assert aut_order(FramedGraph.complete(4)) == 24
    assert aut_order(FramedGraph.cycle(5)) == 10
    assert aut_order(FramedGraph.path(3)) == 2
    assert aut_order(FramedGraph.empty(3)) == 6


def test_enumeration_counts():
    assert [len(enumerate_graphs(n)) for n in range(0, 7)] == [1, 1, 2, 4, 11, 34, 156]


def test_enumeration_burnside_totals():
    # sum over classes of n!/|Aut| must give all 2^(n choose 2) labeled graphs
    for n in range(1, 6):
        total = sum(
            math.factorial(n) // aut for _g, aut in enumerate_graphs(n)
        )
        assert total == 2 ** (n * (n - 1) // 2)


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        enumerate_graphs(8)


# ---------------------------------------------------------------------------
# moves
# ---------------------------------------------------------------------------


def test_first_move_is_an_involution():
    g = FramedGraph.cycle(4)
    assert first_move(first_move(g, 0, 2), 0, 2) == g
    assert first_move(g, 0, 2).adjacent(0, 2)


def test_second_move_is_an_involution():
    for g, _aut in enumerate_graphs(4):
        for a in range(4):
            for b in range(4):
                if a != b:
                    assert second_move(second_move(g, a, b), a, b) == g


def test_second_move_matches_matrix_conjugation():
    for g, _aut in enumerate_graphs(4):
        for a in range(4):
            for b in range(4):
                if a != b:
                    assert second_move_matrix_check(g, a, b)


def test_second_move_with_framing_transfers_framing():
    g = FramedGraph.from_edges(2, [(0, 1)], framing=[0, 1])
    moved = second_move(g, 0, 1)
    assert moved.framing(0) == 1  # picked up b's half-twist


def test_quadruple_shape():
    g = FramedGraph.cycle(5)
    quad = graph_4t_quadruple(g, 0, 1)
    assert quad[0] == g
    assert quad[1] == first_move(g, 0, 1)
    assert quad[2] == second_move(g, 0, 1)
    assert quad[3] == first_move(second_move(g, 0, 1), 0, 1)


def test_pivot_requires_an_edge():
    g = FramedGraph.path(3)
    with pytest.raises(NotAnEdge):
        pivot(g, 0, 2)


def test_pivot_is_an_involution():
    g = FramedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])
    for a, b in [(0, 1), (0, 2), (2, 3)]:
        assert pivot(pivot(g, a, b), a, b) == g
