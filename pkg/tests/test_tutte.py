from fractions import Fraction

import pytest

from greedoid_tutte import (
    BivariatePoly,
    H0X,
    H0Y,
    HAlpha,
    LineY,
    RootedDigraph,
    RootedGraph,
    UnrootedGraph,
    arborescence_count,
    characteristic_polynomial,
    digraph_sinks_fastpath,
    directed_path,
    directed_star,
    enumerate_bases,
    enumerate_feasible_sets,
    h1_closed_form,
    hyperbola_restriction,
    line_y_restriction,
    path_graph,
    spanning_tree_count,
    star_graph,
    to_greedoid,
    tutte_eval,
    tutte_polynomial,
    tutte_restrict,
    unrooted_tutte_polynomial,
    unrooted_tutte_x1,
)
from greedoid_tutte.errors import GroundSetTooLargeError, NotOnCurveError, NotRootConnectedError
from greedoid_tutte.greedoid import subset_ranks

from catalogues import (
    DIRECTED_TRIANGLE,
    TAILED_DIGON,
    TRIANGLE,
    TRIANGLE_UNROOTED,
    TWO_PARALLEL,
    greedoid_instances,
    rooted_trees_up_to,
    tree_form_to_digraph,
)


def expected_path_polynomial(k: int) -> BivariatePoly:
    x, y = BivariatePoly.x(), BivariatePoly.y()
    total = BivariatePoly.constant(1)
    for i in range(1, k + 1):
        total = total + (x - 1) ** i * y ** (i - 1)
    return total


def test_path_and_star_closed_forms():
    for k in range(7):
        assert tutte_polynomial(to_greedoid(path_graph(k))) == expected_path_polynomial(k)
        assert tutte_polynomial(to_greedoid(star_graph(k))) == BivariatePoly.x() ** k
        assert tutte_polynomial(to_greedoid(directed_path(k))) == expected_path_polynomial(k)
        assert tutte_polynomial(to_greedoid(directed_star(k))) == BivariatePoly.x() ** k


def test_single_loop_polynomial():
    loop = RootedGraph(1, ((0, 0),), 0)
    assert tutte_polynomial(to_greedoid(loop)) == BivariatePoly.y()


def test_counting_evaluations_all_instances():
    for name, g in greedoid_instances():
        feasible = enumerate_feasible_sets(g)
        bases = enumerate_bases(g)
        assert tutte_eval(g, 1, 1) == len(bases), name
        assert tutte_eval(g, 2, 1) == len(feasible), name
        assert tutte_eval(g, 2, 2) == 1 << g.size, name
        ranks = subset_ranks(g)
        full = int(ranks[-1])
        spanning = sum(1 for m in range(1 << g.size) if ranks[m] == full)
        assert tutte_eval(g, 1, 2) == spanning, name


def test_restrict_examples():
    assert tutte_restrict(to_greedoid(path_graph(1)), HAlpha(2)).terms == {0: 1, -1: 2}
    assert tutte_restrict(to_greedoid(star_graph(2)), H0Y()).terms == {2: 1}
    # T(P_2; 1, y) = 1: only the full edge set has full rank.
    assert tutte_restrict(to_greedoid(path_graph(2)), H0X()).terms == {0: 1}


def test_restrict_matches_polynomial_substitution():
    for name, g in greedoid_instances():
        if g.size > 8:
            continue
        poly = tutte_polynomial(g)
        for alpha in (Fraction(2), Fraction(-1), Fraction(1, 3)):
            assert tutte_restrict(g, HAlpha(alpha)) == hyperbola_restriction(poly, alpha), name
        for c in (Fraction(-1), Fraction(0), Fraction(2)):
            assert tutte_restrict(g, LineY(c)) == line_y_restriction(poly, c), name
        assert tutte_restrict(g, H0X()) == Laurent_from_y(poly)
        assert tutte_restrict(g, H0Y()) == Laurent_from_x(poly)


def Laurent_from_y(poly):
    from greedoid_tutte import LaurentPoly

    restricted = poly.at_x(1)
    return LaurentPoly({ye: c for (_, ye), c in restricted.terms.items()})


def Laurent_from_x(poly):
    from greedoid_tutte import LaurentPoly

    restricted = poly.at_y(1)
    return LaurentPoly({xe: c for (xe, _), c in restricted.terms.items()})


def test_restrict_halpha_evaluates_to_tutte_eval():
    for name, g in greedoid_instances():
        if g.size > 8:
            continue
        for b in (Fraction(2), Fraction(3), Fraction(-2), Fraction(1, 2)):
            z = b - 1
            for alpha in (Fraction(1), Fraction(-2), Fraction(3, 2)):
                restricted = tutte_restrict(g, HAlpha(alpha))
                assert restricted.evaluate(z) == tutte_eval(g, 1 + alpha / z, b), name


def test_h1_closed_form_examples():
    assert h1_closed_form(4, 3, 2, 2) == 16
    assert h1_closed_form(3, 3, 0, 0) == 0
    assert h1_closed_form(0, 0, 2, 2) == 1
    with pytest.raises(NotOnCurveError):
        h1_closed_form(2, 1, 2, 3)


def test_h1_closed_form_matches_brute_force():
    points = [
        (Fraction(2), Fraction(2)),
        (Fraction(0), Fraction(0)),
        (Fraction(3), Fraction(3, 2)),
        (Fraction(-1), Fraction(1, 2)),
        (Fraction(1, 3), Fraction(-1, 2)),
    ]
    for name, g in greedoid_instances():
        for a, b in points:
            assert h1_closed_form(g.size, g.rank, a, b) == tutte_eval(g, a, b), name


def test_characteristic_polynomial():
    edgeless = RootedGraph(1, (), 0)
    assert characteristic_polynomial(to_greedoid(edgeless)).terms == {0: 1}
    dpath = directed_path(2)
    assert characteristic_polynomial(to_greedoid(dpath)).terms == {0: 1, 1: -1}
    for graph in (TRIANGLE, path_graph(2), TWO_PARALLEL):
        poly = characteristic_polynomial(to_greedoid(graph))
        assert poly.evaluate(1) == 0  # any edge forces a zero at 1


def test_spanning_tree_count_examples():
    assert spanning_tree_count(TRIANGLE) == 3
    assert spanning_tree_count(path_graph(4)) == 1
    assert spanning_tree_count(TWO_PARALLEL) == 2


def test_spanning_tree_count_matches_tutte_everywhere():
    graphs = [
        TRIANGLE,
        TWO_PARALLEL,
        path_graph(3),
        star_graph(4),
        RootedGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)), 1),
        RootedGraph(4, ((0, 1), (2, 3)), 0),  # non-root component
        RootedGraph(2, ((0, 1), (1, 1)), 0),  # loop
    ]
    for graph in graphs:
        assert spanning_tree_count(graph) == tutte_eval(to_greedoid(graph), 1, 1)


def test_arborescence_count_examples():
    bi_triangle = RootedDigraph(3, ((0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)), 0)
    assert arborescence_count(bi_triangle) == 3
    assert arborescence_count(directed_path(2)) == 1
    assert arborescence_count(TAILED_DIGON) == 1


def test_arborescence_count_matches_tutte_everywhere():
    digraphs = [
        TAILED_DIGON,
        DIRECTED_TRIANGLE,
        directed_star(3),
        RootedDigraph(3, ((0, 1), (0, 1), (1, 2)), 0),
        RootedDigraph(3, ((0, 1), (2, 1)), 0),
        RootedDigraph(2, ((0, 1), (1, 1)), 0),
    ]
    for digraph in digraphs:
        assert arborescence_count(digraph) == tutte_eval(to_greedoid(digraph), 1, 1)


def test_sinks_fastpath_examples():
    assert digraph_sinks_fastpath(directed_path(2), 5) == 5
    assert digraph_sinks_fastpath(directed_star(3), 2) == 8
    assert digraph_sinks_fastpath(TAILED_DIGON, 7) == 0  # contains a digon
    with pytest.raises(NotRootConnectedError):
        digraph_sinks_fastpath(RootedDigraph(2, (), 0), 2)


def test_sinks_fastpath_matches_brute_force():
    digraphs = [
        directed_path(1),
        directed_path(3),
        directed_star(3),
        RootedDigraph(4, ((0, 1), (1, 2), (0, 3)), 0),
        RootedDigraph(4, ((0, 1), (0, 2), (1, 3), (2, 3)), 0),
        TAILED_DIGON,
        DIRECTED_TRIANGLE,
        RootedDigraph(1, ((0, 0),), 0),
    ]
    values = (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(5))
    for digraph in digraphs:
        for a in values:
            assert digraph_sinks_fastpath(digraph, a) == tutte_eval(to_greedoid(digraph), a, 0)


def test_unrooted_comparison_evaluator():
    assert unrooted_tutte_x1(TRIANGLE_UNROOTED).terms == {0: 2, 1: 1}  # y + 2
    assert unrooted_tutte_x1(UnrootedGraph(3, ((0, 1), (1, 2)))).terms == {0: 1}
    assert unrooted_tutte_x1(UnrootedGraph(1, ((0, 0),))).terms == {1: 1}
    assert unrooted_tutte_polynomial(TRIANGLE_UNROOTED) == BivariatePoly(
        {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    )


def test_rooted_agrees_with_unrooted_on_x_equals_1():
    graphs = [
        TRIANGLE,
        TWO_PARALLEL,
        path_graph(3),
        star_graph(3),
        RootedGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)), 2),
        RootedGraph(3, ((0, 1), (0, 2), (1, 2), (1, 1)), 1),
    ]
    for graph in graphs:
        unrooted = UnrootedGraph(graph.vertex_count, graph.edges)
        assert tutte_restrict(to_greedoid(graph), H0X()) == unrooted_tutte_x1(unrooted)


def test_rooted_trees_distinguished_by_tutte():
    forms = rooted_trees_up_to(5)
    polys = {}
    for form in forms:
        digraph = tree_form_to_digraph(form)
        poly = tutte_polynomial(to_greedoid(digraph))
        key = tuple(sorted(poly.terms.items()))
        assert key not in polys, f"{form} and {polys.get(key)} share a Tutte polynomial"
        polys[key] = form
    assert len(forms) == 1 + 1 + 2 + 4 + 9 + 20


def test_enumeration_bound():
    big = path_graph(21)
    with pytest.raises(GroundSetTooLargeError):
        tutte_polynomial(to_greedoid(big))
    assert tutte_eval(to_greedoid(big), 1, 1, max_elements=21) == 1
