"""Built-in identity suites for the ``verify`` CLI subcommand.

Each suite runs one construction identity over a small built-in catalogue
(optionally extended with a user-supplied carrier) and reports one
(name, ok, detail) row per instance.  Failures carry the witnessing
instance and point in the detail string.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .carriers import (
    BinaryMatrix,
    RootedDigraph,
    RootedGraph,
    UnrootedGraph,
    demo_binary_matrix,
    directed_path,
    directed_star,
    identity_matrix,
    path_graph,
    star_graph,
    to_greedoid,
)
from .constructions import (
    attach_graphs,
    bidirect,
    block_diag,
    count_subtrees,
    count_subtrees_typed,
    digon_stretch,
    predicted_attachment,
    predicted_full_rank,
    predicted_stretch_subtrees,
    predicted_thickening,
    stretch_unrooted,
    thicken,
)
from .errors import DenominatorVanishesError
from .greedoid import DEFAULT_MAX_ELEMENTS
from .polynomials import LaurentPoly
from .tutte import H0X, H0Y, tutte_polynomial, tutte_restrict

Row = tuple[str, bool, str]

SAMPLE_POINTS = [
    (Fraction(3), Fraction(2)),
    (Fraction(-1), Fraction(3)),
    (Fraction(1, 2), Fraction(-2)),
    (Fraction(5, 3), Fraction(2, 5)),
    (Fraction(0), Fraction(4)),
    (Fraction(2), Fraction(-3)),
]


def _thickening_catalogue():
    return [
        ("star-1", star_graph(1)),
        ("path-2", path_graph(2)),
        ("triangle", RootedGraph(3, ((0, 1), (0, 2), (1, 2)), 0)),
        ("directed-path-2", directed_path(2)),
        ("directed-star-2", directed_star(2)),
        ("identity-2", identity_matrix(2)),
        ("demo-matrix", demo_binary_matrix()),
    ]


def suite_thickening(extra=None, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[Row]:
    rows: list[Row] = []
    catalogue = _thickening_catalogue()
    if extra is not None:
        catalogue.append(("user", extra))
    for name, carrier in catalogue:
        g = to_greedoid(carrier)
        base = tutte_polynomial(g, max_elements)
        ok, detail = True, ""
        for k in (1, 2, 3):
            actual = tutte_polynomial(thicken(carrier, k), max_elements)
            if actual != predicted_thickening(base, g.rank, k, "generic"):
                ok, detail = False, f"k={k} generic rule"
                break
            if actual.at_y(-1) != predicted_thickening(base, g.rank, k, "y_eq_minus1"):
                ok, detail = False, f"k={k} y=-1 rule"
                break
            if actual.at_y(1) != predicted_thickening(base, g.rank, k, "y_eq_1"):
                ok, detail = False, f"k={k} y=1 rule"
                break
        rows.append((f"thickening {name}", ok, detail))
    return rows


def suite_attachment(extra=None, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[Row]:
    rows: list[Row] = []
    bases = [("path-1", path_graph(1)), ("path-2", path_graph(2)), ("star-2", star_graph(2))]
    if isinstance(extra, RootedGraph):
        bases.append(("user", extra))
    patches = [("star-1", star_graph(1)), ("path-2", path_graph(2))]
    for bname, base in bases:
        for pname, patch in patches:
            g1, g2 = to_greedoid(base), to_greedoid(patch)
            combined = tutte_polynomial(attach_graphs(base, patch), max_elements)
            prediction = predicted_attachment(
                tutte_polynomial(g1, max_elements),
                tutte_polynomial(g2, max_elements),
                g1.rank,
                g2.rank,
                g2.size,
            )
            ok, detail = True, ""
            for a, b in SAMPLE_POINTS:
                try:
                    expected = prediction.evaluate(a, b)
                except DenominatorVanishesError:
                    continue
                if combined.evaluate(a, b) != expected:
                    ok, detail = False, f"point ({a}, {b})"
                    break
            rows.append((f"attachment {bname}~{pname}", ok, detail))
    return rows


def suite_fullrank(extra=None, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[Row]:
    rows: list[Row] = []
    mats = [("identity-1", identity_matrix(1)), ("identity-2", identity_matrix(2)), ("demo", demo_binary_matrix())]
    if isinstance(extra, BinaryMatrix):
        mats.append(("user", extra))
    for name1, m1 in mats:
        for name2, m2 in mats:
            g1, g2 = to_greedoid(m1), to_greedoid(m2)
            actual = tutte_polynomial(block_diag(m1, m2), max_elements)
            predicted = predicted_full_rank(
                tutte_polynomial(g1, max_elements),
                tutte_polynomial(g2, max_elements),
                g2.rank,
                g2.size,
            )
            rows.append((f"fullrank {name1}|{name2}", actual == predicted, ""))
    return rows


def suite_stretch(extra=None, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[Row]:
    rows: list[Row] = []
    graphs = [
        ("single-edge", UnrootedGraph(2, ((0, 1),))),
        ("path-2", UnrootedGraph(3, ((0, 1), (1, 2)))),
        ("triangle", UnrootedGraph(3, ((0, 1), (0, 2), (1, 2)))),
    ]
    if isinstance(extra, UnrootedGraph):
        graphs.append(("user", extra))
    for name, graph in graphs:
        typed = count_subtrees_typed(graph, max_elements)
        ok, detail = True, ""
        for k in (1, 2, 3):
            direct = count_subtrees(stretch_unrooted(graph, k), max_elements)
            if direct != predicted_stretch_subtrees(typed, graph.edge_count, k):
                ok, detail = False, f"k={k}"
                break
        rows.append((f"stretch {name}", ok, detail))
    return rows


def suite_digon(extra=None, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[Row]:
    rows: list[Row] = []
    digraphs = [
        ("single-arc", RootedDigraph(2, ((0, 1),), 0)),
        ("directed-path-2", directed_path(2)),
        ("directed-cycle-2", RootedDigraph(2, ((0, 1), (1, 0)), 0)),
        ("directed-star-2", directed_star(2)),
    ]
    if isinstance(extra, RootedDigraph):
        digraphs.append(("user", extra))
    for name, digraph in digraphs:
        g = to_greedoid(digraph)
        size, rank = g.size, g.rank
        ok, detail = True, ""
        for k in (1, 2):
            lhs = tutte_restrict(to_greedoid(digon_stretch(digraph, k)), H0X(), max_elements)
            base = tutte_restrict(g, H0X(), max_elements)
            rhs_terms = {}
            for e, c in base.terms.items():
                # substitute y -> (k + y)/(k + 1) as an exact polynomial
                for j in range(e + 1):
                    coeff = c * comb(e, j) * Fraction(k) ** (e - j) / Fraction(k + 1) ** e
                    rhs_terms[j] = rhs_terms.get(j, Fraction(0)) + coeff
            rhs = (
                Fraction(k + 1) ** (size - rank)
                * LaurentPoly.monomial(k * size)
                * LaurentPoly(rhs_terms)
            )
            if lhs != rhs:
                ok, detail = False, f"k={k}"
                break
        rows.append((f"digon-stretch {name}", ok, detail))
    return rows


def suite_bidirect(extra=None, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[Row]:
    rows: list[Row] = []
    graphs = [
        ("path-2", path_graph(2)),
        ("star-3", star_graph(3)),
        ("triangle", RootedGraph(3, ((0, 1), (0, 2), (1, 2)), 0)),
        ("two-parallel", RootedGraph(2, ((0, 1), (0, 1)), 0)),
    ]
    if isinstance(extra, RootedGraph):
        graphs.append(("user", extra))
    for name, graph in graphs:
        lhs = tutte_restrict(to_greedoid(bidirect(graph)), H0Y(), max_elements)
        rhs = tutte_restrict(to_greedoid(graph), H0Y(), max_elements)
        rows.append((f"bidirect {name}", lhs == rhs, ""))
    return rows


_SUITES = {
    "thickening": suite_thickening,
    "attachment": suite_attachment,
    "fullrank": suite_fullrank,
    "stretch": suite_stretch,
    "digon": suite_digon,
    "bidirect": suite_bidirect,
}


def run_suite(name: str, extra=None, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[Row]:
    if name == "all":
        rows: list[Row] = []
        for suite in _SUITES.values():
            rows += suite(None, max_elements)
        return rows
    return _SUITES[name](extra, max_elements)
