"""Desk-scale executable forms of the interpolation reductions.

Every pipeline here consumes a point oracle (an evaluator of the Tutte
polynomial at one fixed rational point), feeds it polynomially many
constructed carriers (thickenings or star attachments), rescales the
answers by the construction identities, and solves a Vandermonde system to
recover the coefficients of the Tutte polynomial restricted to a curve.
The recovered coefficients must agree with the direct restriction computed
by brute force; the test suite checks this coefficient by coefficient.

Oracles are injected values, instantiated by default with the brute-force
evaluator, so tests can also inject counterfeit oracles to exercise error
paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .carriers import (
    BinaryMatrix,
    Carrier,
    RootedDigraph,
    RootedGraph,
    UnrootedGraph,
    directed_path,
    directed_star,
    gf2_row_rank,
    graph_is_connected,
    identity_matrix,
    path_graph,
    reachable_from_root,
    require_root_connected,
    root_component_vertices,
    star_graph,
    to_greedoid,
)
from .constructions import attach_carrier, block_diag, digon_stretch, thicken
from .errors import (
    ForbiddenPointError,
    FullRowRankError,
    NotConnectedError,
    PreconditionError,
    ProbabilityRangeError,
)
from .exact import vandermonde_solve
from .greedoid import DEFAULT_MAX_ELEMENTS, loops_of, rank_size_profile
from .polynomials import LaurentPoly, rational
from .tutte import H0Y, tutte_eval, tutte_restrict

FAMILIES = ("graph", "digraph", "binary")


@dataclass
class PointOracle:
    """Evaluator of T(carrier; a, b) at one fixed rational point.

    Counts its invocations so tests can pin the polynomial query budget of
    each reduction.
    """

    family: str
    a: Fraction
    b: Fraction
    evaluate: Callable[[Carrier], Fraction]
    calls: int = field(default=0, repr=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown family {self.family!r}")
        self.a = rational(self.a)
        self.b = rational(self.b)

    def __call__(self, carrier: Carrier) -> Fraction:
        self.calls += 1
        return self.evaluate(carrier)


def brute_force_oracle(
    family: str, a, b, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> PointOracle:
    """The default oracle: subset enumeration on whatever carrier it is given."""
    a, b = rational(a), rational(b)
    return PointOracle(family, a, b, lambda carrier: tutte_eval(carrier, a, b, max_elements))


def _carrier_rank(carrier: Carrier) -> int:
    return to_greedoid(carrier).rank


def _star_for(family: str, k: int):
    return directed_star(k) if family == "digraph" else star_graph(k)


def _path_for(family: str, k: int):
    return directed_path(k) if family == "digraph" else path_graph(k)


def interpolate_curve(
    oracle: PointOracle, carrier: Carrier, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> LaurentPoly:
    """Recover a curve restriction from point evaluations of thickenings.

    For an oracle at (a, b) with b not in {-1, 0} and (a, b) != (1, 1):

    * b = 1: queries the k-thickenings for k = 1..rank+1, divides by k^rank
      and interpolates T(x, 1) at the nodes (a+k-1)/k (a polynomial in x);
    * a = 1: queries k = 1..size+rank+1, divides by (1+b+...+b^(k-1))^rank
      and interpolates T(1, y) at the nodes b^k (exponents -rank..size);
    * otherwise: same k-range, interpolating the hyperbola restriction in
      z = y - 1 at the nodes b^k - 1.

    The evaluation nodes are checked to be pairwise distinct before solving.
    """
    a, b = oracle.a, oracle.b
    if (a, b) == (1, 1):
        raise ForbiddenPointError("at (1, 1) all thickening evaluation points coincide")
    if b in (-1, 0):
        raise ForbiddenPointError(
            f"b = {b} is outside the thickening interpolation's case analysis"
        )
    g = to_greedoid(carrier)
    size, rank = g.size, g.rank
    if b == 1:
        ks = range(1, rank + 2)
        nodes = [(a + k - 1) / k for k in ks]
        lowest = 0
    elif a == 1:
        ks = range(1, size + rank + 2)
        nodes = [b**k for k in ks]
        lowest = -rank
    else:
        ks = range(1, size + rank + 2)
        nodes = [b**k - 1 for k in ks]
        lowest = -rank
    if len(set(nodes)) != len(nodes):
        raise ForbiddenPointError("thickening evaluation points are not pairwise distinct")
    values = []
    for k in ks:
        raw = oracle(thicken(carrier, k))
        s = sum((b**t for t in range(k)), Fraction(0))
        values.append(raw / s**rank)
    return vandermonde_solve(nodes, values, lowest)


def interpolate_line_y_minus1(
    oracle: PointOracle, carrier: Carrier, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> LaurentPoly:
    """Recover T(x, -1) as a polynomial in z = x - 1 from star attachments.

    Queries the star attachments carrier ~ S_k for k = 0..rank, divides by
    a^(k*rank) and interpolates at the nodes (a-1) * (-(a-1)/a)^k.  The
    points (1/2, -1) and (1, -1) are excluded (the nodes collide); an oracle
    at a = 0 is first converted into one at (2, -1) by pre-attaching a
    two-edge path, then the pipeline recurses.
    """
    a, b = oracle.a, oracle.b
    if b != -1:
        raise ForbiddenPointError(f"this pipeline needs an oracle on the line y = -1, got b = {b}")
    if oracle.family == "binary":
        raise PreconditionError(
            "star attachments are not defined for binary matrices; "
            "the y = -1 line for binary greedoids is covered by binary_identities_check"
        )
    if a in (Fraction(1, 2), Fraction(1)):
        raise ForbiddenPointError(
            f"a = {a} makes the attachment evaluation points collide"
        )
    if a == 0:
        pre = _path_for(oracle.family, 2)

        def rerouted(c: Carrier) -> Fraction:
            sign = Fraction(-1) ** _carrier_rank(c)
            return sign * oracle(attach_carrier(c, pre))

        inner = PointOracle(oracle.family, Fraction(2), Fraction(-1), rerouted)
        return interpolate_line_y_minus1(inner, carrier, max_elements)
    rank = _carrier_rank(carrier)
    nodes = []
    values = []
    for k in range(rank + 1):
        attached = attach_carrier(carrier, _star_for(oracle.family, k))
        values.append(oracle(attached) / a ** (k * rank))
        nodes.append((a - 1) ** (k + 1) * Fraction(-1) ** k / a**k)
    if len(set(nodes)) != len(nodes):
        raise ForbiddenPointError("attachment evaluation points are not pairwise distinct")
    return vandermonde_solve(nodes, values, 0)


def _restrict_to_root_component(carrier: Carrier) -> Carrier:
    """Relabel the root component; only valid when no edge sits outside it."""
    if isinstance(carrier, RootedGraph):
        keep = sorted(root_component_vertices(carrier))
        index = {v: i for i, v in enumerate(keep)}
        return RootedGraph(
            len(keep),
            tuple((index[u], index[v]) for u, v in carrier.edges),
            index[carrier.root],
        )
    if isinstance(carrier, RootedDigraph):
        keep = sorted(reachable_from_root(carrier))
        index = {v: i for i, v in enumerate(keep)}
        return RootedDigraph(
            len(keep),
            tuple((index[u], index[v]) for u, v in carrier.arcs),
            index[carrier.root],
        )
    return carrier


def recover_point_1_0(
    oracle: PointOracle, carrier: Carrier, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> Fraction:
    """T(carrier; 1, 0) from a single oracle call at (a, 0), a != 0.

    Attaching one pendant edge at every non-root vertex multiplies the
    y = 0 evaluation by a^rank and moves x to 1.  A carrier with greedoid
    loops (self-loops or edges outside the root component) contributes a
    factor y^(number of loops), so its value at y = 0 is 0 outright.
    """
    a, b = oracle.a, oracle.b
    if b != 0:
        raise ForbiddenPointError(f"this recovery needs an oracle on the line y = 0, got b = {b}")
    if a == 0:
        raise ForbiddenPointError("a = 0 does not determine T(1, 0)")
    if loops_of(to_greedoid(carrier), max_elements):
        return Fraction(0)
    carrier = _restrict_to_root_component(carrier)
    rank = _carrier_rank(carrier)
    attached = attach_carrier(carrier, _star_for(oracle.family, 1))
    return oracle(attached) / a**rank


def subtree_count_via_rooted(
    graph: UnrootedGraph, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> tuple[int, dict[int, int]]:
    """Count subtrees of a connected graph through rooted restrictions.

    For every root choice the y = 1 restriction lists, per size i, the
    number of trees through that root; summing over roots and dividing by
    i+1 (each i-edge subtree is counted once per vertex) yields the subtree
    counts by size.
    """
    if not graph_is_connected(graph):
        raise NotConnectedError("subtree counting needs a connected graph")
    per_size: dict[int, Fraction] = {}
    for root in range(graph.vertex_count):
        rooted = RootedGraph(graph.vertex_count, graph.edges, root)
        g = to_greedoid(rooted)
        rank = g.rank
        restricted = tutte_restrict(g, H0Y(), max_elements)
        shifted = restricted.compose_shift(1)  # coefficients of (x-1) powers
        for exp, coeff in shifted.terms.items():
            size = rank - exp
            per_size[size] = per_size.get(size, Fraction(0)) + coeff
    table: dict[int, int] = {}
    for size, total in sorted(per_size.items()):
        value = total / (size + 1)
        if value.denominator != 1:
            raise AssertionError("per-root subtree totals must divide evenly")
        if value:
            table[size] = int(value)
    return sum(table.values()), table


def reliability_identity(
    digraph: RootedDigraph, p, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> tuple[Fraction, Fraction]:
    """Probability that random arc deletion keeps the digraph root-connected.

    Returns the pair (direct sum over surviving arc sets, reconstruction
    p^(|E|-rank) * (1-p)^rank * T(D; 1, 1/p)); the two must agree.
    """
    p = rational(p)
    if not 0 < p < 1:
        raise ProbabilityRangeError(f"need 0 < p < 1, got {p}")
    require_root_connected(digraph)
    g = to_greedoid(digraph)
    size, rank = g.size, g.rank
    profile = rank_size_profile(g, max_elements)
    direct = Fraction(0)
    for (d, s), count in profile.items():
        if d:
            continue
        j = s + rank  # subsets with full rank have size rank + surplus
        direct += count * p ** (size - j) * (1 - p) ** j
    reconstruction = p ** (size - rank) * (1 - p) ** rank * tutte_eval(
        g, 1, 1 / p, max_elements
    )
    return direct, reconstruction


def digon_reduction_check(
    digraph: RootedDigraph, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> bool:
    """Check T(D_2; 1, -1) = 3^(|E|-rank) * T(D; 1, 1/3) by brute force."""
    g = to_greedoid(digraph)
    size, rank = g.size, g.rank
    lhs = tutte_eval(digon_stretch(digraph, 2), 1, -1, max_elements)
    rhs = Fraction(3) ** (size - rank) * tutte_eval(g, 1, Fraction(1, 3), max_elements)
    return lhs == rhs


DEFAULT_BINARY_SAMPLE = (
    Fraction(2),
    Fraction(3),
    Fraction(1, 2),
    Fraction(-1),
    Fraction(5, 3),
)


def binary_identities_check(
    matrix: BinaryMatrix,
    a_values=DEFAULT_BINARY_SAMPLE,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> dict:
    """Check the two block-diagonal identities for a full-row-rank matrix.

    At every sampled a: T(M block I1; a, 0) = a * T(M; 1, 0) and
    (2a-1) * T(M; 1, -1) = T(M block I1; a, -1) + (a-1) * T(M; a, -1).
    """
    if gf2_row_rank(matrix) != matrix.row_count:
        raise FullRowRankError("identities need linearly independent rows")
    extended = block_diag(matrix, identity_matrix(1))
    t_m_10 = tutte_eval(matrix, 1, 0, max_elements)
    t_m_1m1 = tutte_eval(matrix, 1, -1, max_elements)
    report: dict = {"values": {}, "ok": True}
    for raw in a_values:
        a = rational(raw)
        y0 = tutte_eval(extended, a, 0, max_elements) == a * t_m_10
        ym1 = (2 * a - 1) * t_m_1m1 == tutte_eval(extended, a, -1, max_elements) + (
            a - 1
        ) * tutte_eval(matrix, a, -1, max_elements)
        report["values"][str(a)] = {"y0": y0, "yminus1": ym1}
        report["ok"] = report["ok"] and y0 and ym1
    return report
