"""Graph and diagram invariants: chromatic, Stanley, interlace, transition,
skew characteristic, Abel."""

from weightsys.diagrams import complete_diagram, enumerate_diagrams
from weightsys.graphs import FramedGraph, enumerate_graphs, graph_4t_quadruple
from weightsys.invariants import (
    abel,
    chromatic,
    chromatic_from_stanley,
    interlace_graph,
    skew_characteristic,
    spanning_tree_count,
    stanley,
    stanley_to_weighted,
    transition_chord,
    weighted_chromatic,
)
from weightsys.poly import MPoly, ONE, q_var

C = MPoly.variable("c")
X = MPoly.variable("x")
U = MPoly.variable("u")
S = MPoly.variable("s")
T = MPoly.variable("t")


# ---------------------------------------------------------------------------
# chromatic
# ---------------------------------------------------------------------------


def test_chromatic_closed_forms():
    assert chromatic(FramedGraph.complete(3)) == C * (C - 1) * (C - 2)
    assert chromatic(FramedGraph.complete(4)) == C * (C - 1) * (C - 2) * (C - 3)
    assert chromatic(FramedGraph.path(4)) == C * (C - 1) ** 3
    assert chromatic(FramedGraph.cycle(4)) == (C - 1) ** 4 + (C - 1)
    assert chromatic(FramedGraph.cycle(5)) == (C - 1) ** 5 - (C - 1)
    assert chromatic(FramedGraph.empty(3)) == C**3


def test_chromatic_is_multiplicative_over_components():
    a = FramedGraph.cycle(3)
    b = FramedGraph.path(2)
    assert chromatic(a.disjoint_union(b)) == chromatic(a) * chromatic(b)


def test_chromatic_counts_colorings():
    # evaluation at c=3 counts proper 3-colorings
    from fractions import Fraction

    tri = FramedGraph.complete(3)
    assert chromatic(tri).eval({"c": Fraction(3)}) == 6
    assert chromatic(FramedGraph.cycle(5)).eval({"c": Fraction(2)}) == 0


# ---------------------------------------------------------------------------
# Stanley symmetrization and the weighted version
# ---------------------------------------------------------------------------


def test_stanley_small_values():
    assert stanley(FramedGraph.empty(2)) == MPoly.variable("p1") ** 2
    assert stanley(FramedGraph.complete(2)) == (
        MPoly.variable("p1") ** 2 - MPoly.variable("p2")
    )


def test_stanley_collapses_to_chromatic():
    for n in range(1, 5):
        for g, _aut in enumerate_graphs(n):
            assert chromatic_from_stanley(stanley(g)) == chromatic(g), g.rows


def test_weighted_chromatic_small_values():
    assert weighted_chromatic(FramedGraph.empty(1)) == q_var(1)
    assert weighted_chromatic(FramedGraph.complete(2)) == q_var(1) ** 2 + q_var(2)


def test_weighted_chromatic_sees_weights():
    heavy = FramedGraph(1, (0,), weights=(3,))
    assert weighted_chromatic(heavy) == q_var(3)


def test_stanley_to_weighted_sign_rule():
    # p_k -> (-1)^(k-1) q_k turns the symmetrized chromatic polynomial into
    # the weighted one; the global-degree variant differs already on one edge
    for n in range(1, 5):
        for g, _aut in enumerate_graphs(n):
            assert stanley_to_weighted(stanley(g)) == weighted_chromatic(g), g.rows
    k2 = FramedGraph.complete(2)
    stated = stanley_to_weighted(stanley(k2), paper_rule=True, n=2)
    assert stated != weighted_chromatic(k2)
    assert stated == q_var(1) ** 2 - q_var(2)


# ---------------------------------------------------------------------------
# Abel polynomial and spanning trees
# ---------------------------------------------------------------------------


def test_abel_small_values():
    assert abel(FramedGraph.empty(1)) == q_var(1)
    assert abel(FramedGraph.complete(2)) == q_var(1) ** 2 + 2 * q_var(2)
    assert abel(FramedGraph.complete(3)) == (
        q_var(1) ** 3 + 6 * q_var(1) * q_var(2) + 9 * q_var(3)
    )


def test_abel_top_term_counts_spanning_trees():
    # the q_n coefficient is n * (number of spanning trees)
    for g in (FramedGraph.complete(4), FramedGraph.cycle(5), FramedGraph.path(4)):
        n = g.n
        top = abel(g).coefficient("q%d" % n, 1).constant_term()
        assert top == n * spanning_tree_count(g)


def test_spanning_tree_counts():
    assert spanning_tree_count(FramedGraph.complete(4)) == 16
    assert spanning_tree_count(FramedGraph.complete(5)) == 125
    assert spanning_tree_count(FramedGraph.cycle(5)) == 5
    assert spanning_tree_count(FramedGraph.path(4)) == 1
    assert spanning_tree_count(FramedGraph.empty(2)) == 0


# ---------------------------------------------------------------------------
# interlace
# ---------------------------------------------------------------------------


def test_interlace_small_values():
    assert interlace_graph(FramedGraph.empty(3)) == X**3
    for n in range(2, 6):
        assert interlace_graph(FramedGraph.complete(n)) == 2 ** (n - 1) * X
    assert interlace_graph(FramedGraph.path(3)) == X**2 + 2 * X
    assert interlace_graph(FramedGraph.cycle(5)) == 5 * X**2 + 6 * X


def test_interlace_is_multiplicative_over_components():
    a = FramedGraph.path(3)
    b = FramedGraph.complete(2)
    assert interlace_graph(a.disjoint_union(b)) == interlace_graph(a) * interlace_graph(b)


# ---------------------------------------------------------------------------
# skew characteristic
# ---------------------------------------------------------------------------


def test_skew_characteristic_small_values():
    assert skew_characteristic(FramedGraph.empty(3)) == U**3
    assert skew_characteristic(FramedGraph.complete(2)) == U**2 + 1
    assert skew_characteristic(FramedGraph.complete(3)) == U**3 + 3 * U
    assert skew_characteristic(FramedGraph.cycle(5)) == U**5 + 5 * U**3 + 5 * U


def test_skew_characteristic_odd_graphs_have_no_constant_term():
    # odd induced subgraphs are always degenerate, so odd |V| kills u^0
    for g, _aut in enumerate_graphs(5):
        assert skew_characteristic(g).coefficient("u", 0).is_zero()


# ---------------------------------------------------------------------------
# transition polynomial
# ---------------------------------------------------------------------------


def test_transition_single_chord():
    assert transition_chord(complete_diagram(1)) == -T * X + S + T


def test_transition_two_crossing_chords():
    want = -2 * S * T * X + T**2 * X + 2 * S * T + S**2 - T**2
    assert transition_chord(complete_diagram(2)) == want


def test_transition_custom_weights_keep_states_separate():
    one = ONE
    counts = transition_chord(
        complete_diagram(1), {"phi": one, "chi": one, "psi": one}
    )
    # three states of a single chord: boundary counts 2, 1, 1
    assert counts == X + 2


# ---------------------------------------------------------------------------
# four-term smoke checks (the exhaustive sweeps live in the acceptance suite)
# ---------------------------------------------------------------------------


def test_graph_invariants_vanish_on_small_quadruples():
    for g, _aut in enumerate_graphs(4):
        for a in range(4):
            for b in range(4):
                if a == b:
                    continue
                quad = graph_4t_quadruple(g, a, b)
                for inv in (chromatic, weighted_chromatic, interlace_graph):
                    v = [inv(h) for h in quad]
                    assert (v[0] - v[1] - v[2] + v[3]).is_zero()


def test_transition_vanishes_on_small_quadruples():
    from weightsys.diagrams import all_four_term_quadruples

    for d in enumerate_diagrams(3):
        for _a, _b, _p, quad in all_four_term_quadruples(d):
            v = [transition_chord(x) for x in quad]
            assert (v[0] - v[1] - v[2] + v[3]).is_zero()
