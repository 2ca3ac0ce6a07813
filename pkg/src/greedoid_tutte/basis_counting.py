"""Matroid basis counting over a structured matrix family.

A simple graph G is lifted into a 0/1 matrix whose columns, read as a
matroid over a chosen field, have their bases classified by "templates" of
G: spanning subgraphs whose edges are absent, bidirected, directed with a
two-letter label, or undirected with a two-letter label.  The number of
bases per feasible template is a closed form in the lift parameter k and
the template's number of bidirected edges, so counting bases for several k
and solving the resulting linear system recovers the number of feasible
templates with n/2 bidirected edges: the perfect matchings of G.

The matrix construction, per edge e_i = v_a v_b (a < b) and copy j, places
the 3x7 block

        v_a  v_b  e_i  w_ij  x_ij  y_ij  z_ij
  v_a    1    0    1    0     1     0     1
  v_b    0    1    1    0     0     1     1
  f_ij   0    0    0    1     1     1     1

into an otherwise-zero matrix with rows (vertices, edges, copy rows f_ij)
and columns (vertices, edges, four letter columns per edge copy).  The
matroid actually counted lives on the letter columns only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import (
    GroundSetTooLargeError,
    NotABasisError,
    NotSimpleError,
    OddVertexCountError,
    PreconditionError,
)
from .exact import ExactMatrix, bareiss_solve

LETTERS = ("w", "x", "y", "z")


@dataclass(frozen=True)
class SimpleGraph:
    """Simple graph without isolated vertices; edges stored with a < b."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise NotSimpleError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise NotSimpleError(f"edge ({u}, {v}) outside vertex range")
            pairs.append((min(u, v), max(u, v)))
        if len(set(pairs)) != len(pairs):
            raise NotSimpleError("parallel edges are not allowed")
        covered = {u for p in pairs for u in p}
        if covered != set(range(self.vertex_count)):
            raise NotSimpleError("isolated vertices are not allowed")
        object.__setattr__(self, "edges", tuple(pairs))

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Field:
    """GF(2), GF(p) for an odd prime, or the rationals (char 0)."""

    char: int

    def __post_init__(self):
        if self.char == 0:
            return
        if self.char < 2 or any(self.char % d == 0 for d in range(2, int(self.char**0.5) + 1)):
            raise PreconditionError(f"{self.char} is not prime")

    @property
    def is_char_two(self) -> bool:
        return self.char == 2

    def __str__(self):
        return "rationals" if self.char == 0 else f"GF({self.char})"


GF2 = Field(2)
GF3 = Field(3)
RATIONALS = Field(0)


# ---------------------------------------------------------------------------
# matrix construction


@dataclass(frozen=True)
class GadgetMatrix:
    """The lifted matrix, with labelled rows and columns.

    Row labels: ("v", i), ("e", i), ("f", i, j).  Column labels: ("v", i),
    ("e", i) and ("w"|"x"|"y"|"z", i, j).  The letter columns are the ground
    set of the counted matroid; the vertex and edge columns only take part
    in closure computations.
    """

    graph: SimpleGraph
    copies: int
    row_labels: tuple
    col_labels: tuple
    columns: tuple[tuple[int, ...], ...]

    @property
    def target_rank(self) -> int:
        return self.graph.vertex_count + self.graph.edge_count * self.copies

    def ground_labels(self) -> tuple:
        return tuple(lbl for lbl in self.col_labels if lbl[0] in LETTERS)

    def ground_columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            col for lbl, col in zip(self.col_labels, self.columns) if lbl[0] in LETTERS
        )

    def column(self, label) -> tuple[int, ...]:
        return self.columns[self.col_labels.index(label)]


def build_gadget_matrix(graph: SimpleGraph, copies: int) -> GadgetMatrix:
    if copies < 1:
        raise PreconditionError("need at least one copy block per edge")
    n, m, k = graph.vertex_count, graph.edge_count, copies
    row_labels = (
        [("v", i) for i in range(n)]
        + [("e", i) for i in range(m)]
        + [("f", i, j) for i in range(m) for j in range(k)]
    )
    row_index = {lbl: r for r, lbl in enumerate(row_labels)}
    col_labels: list = [("v", i) for i in range(n)] + [("e", i) for i in range(m)]
    for i in range(m):
        for j in range(k):
            col_labels += [(letter, i, j) for letter in LETTERS]
    total_rows = len(row_labels)
    columns = []
    for lbl in col_labels:
        col = [0] * total_rows
        if lbl[0] == "v":
            col[row_index[lbl]] = 1
        elif lbl[0] == "e":
            a, b = graph.edges[lbl[1]]
            col[row_index[("v", a)]] = 1
            col[row_index[("v", b)]] = 1
        else:
            letter, i, j = lbl
            a, b = graph.edges[i]
            if letter in ("x", "z"):
                col[row_index[("v", a)]] = 1
            if letter in ("y", "z"):
                col[row_index[("v", b)]] = 1
            col[row_index[("f", i, j)]] = 1
        columns.append(tuple(col))
    return GadgetMatrix(graph, k, tuple(row_labels), tuple(col_labels), tuple(columns))


# ---------------------------------------------------------------------------
# rank and basis counting over a field


def matrix_rank(columns, field: Field) -> int:
    """Rank of the given column vectors over the field."""
    cols = [tuple(int(v) for v in col) for col in columns]
    if not cols:
        return 0
    if field.char == 2:
        basis: dict[int, int] = {}
        for col in cols:
            vec = sum((bit & 1) << r for r, bit in enumerate(col))
            while vec:
                high = vec.bit_length() - 1
                if high in basis:
                    vec ^= basis[high]
                else:
                    basis[high] = vec
                    break
        return len(basis)
    pivots: list[tuple[int, list[Fraction]]] = []
    p = field.char
    for col in cols:
        if p:
            vec = [v % p for v in col]
        else:
            vec = [Fraction(v) for v in col]
        for pr, pv in pivots:
            if vec[pr]:
                if p:
                    factor = vec[pr] * pow(pv[pr], -1, p) % p
                    vec = [(a - factor * b) % p for a, b in zip(vec, pv)]
                else:
                    factor = vec[pr] / pv[pr]
                    vec = [a - factor * b for a, b in zip(vec, pv)]
        nz = [r for r, v in enumerate(vec) if v]
        if nz:
            pivots.append((nz[0], vec))
    return len(pivots)


def _count_gf2(cols: list[int], need: int) -> int:
    total = 0
    nc = len(cols)
    for idx in range(nc):
        if nc - idx < need:
            break
        if need == 1:
            total += nc - idx
            break
        c = cols[idx]
        low = c & -c
        reduced = []
        for d in cols[idx + 1 :]:
            if d & low:
                d ^= c
            if d:
                reduced.append(d)
        if len(reduced) >= need - 1:
            total += _count_gf2(reduced, need - 1)
    return total


def _count_gfp(cols: np.ndarray, need: int, p: int) -> int:
    total = 0
    nc = cols.shape[1]
    for idx in range(nc):
        if nc - idx < need:
            break
        if need == 1:
            total += nc - idx
            break
        c = cols[:, idx]
        pr = int(np.nonzero(c)[0][0])
        rest = cols[:, idx + 1 :]
        factors = (rest[pr] * pow(int(c[pr]), -1, p)) % p
        reduced = (rest - np.outer(c, factors)) % p
        reduced = reduced[:, reduced.any(axis=0)]
        if reduced.shape[1] >= need - 1:
            total += _count_gfp(reduced, need - 1, p)
    return total


def _count_exact(cols: np.ndarray, need: int, divisor: int) -> int:
    # Fraction-free one-step elimination; entries stay minors of the 0/1
    # start matrix, far below the int64 range at the sizes used here.
    total = 0
    nc = cols.shape[1]
    for idx in range(nc):
        if nc - idx < need:
            break
        if need == 1:
            total += nc - idx
            break
        c = cols[:, idx]
        pr = int(np.nonzero(c)[0][0])
        piv = int(c[pr])
        rest = cols[:, idx + 1 :]
        reduced = (piv * rest - np.outer(c, rest[pr])) // divisor
        reduced = reduced[:, reduced.any(axis=0)]
        if reduced.shape[1] >= need - 1:
            total += _count_exact(reduced, need - 1, piv)
    return total


def count_bases(
    columns, field: Field, size: int | None = None, max_subsets: int = 10_000_000
) -> int:
    """Number of independent column subsets of the given size (default: rank).

    Enumerates by depth-first search over echelon-reduced columns, dropping
    columns that become dependent and abandoning branches whose remaining
    columns cannot reach the required size.  The subset space C(columns, size)
    is capped by ``max_subsets`` because even the pruned search degrades with
    it.
    """
    cols = [tuple(int(v) for v in col) for col in columns]
    need = matrix_rank(cols, field) if size is None else size
    if comb(len(cols), need) > max_subsets:
        raise GroundSetTooLargeError(len(cols), max_subsets)
    if need == 0:
        return 1
    if field.char == 2:
        packed = [sum((bit & 1) << r for r, bit in enumerate(col)) for col in cols]
        return _count_gf2([c for c in packed if c], need)
    if field.char:
        arr = np.array(cols, dtype=np.int64).T % field.char
        arr = arr[:, arr.any(axis=0)]
        return _count_gfp(arr, need, field.char)
    arr = np.array(cols, dtype=np.int64).T
    arr = arr[:, arr.any(axis=0)]
    return _count_exact(arr, need, 1)


# ---------------------------------------------------------------------------
# templates


@dataclass(frozen=True)
class EdgeState:
    """State of one present edge: bidirected, directed-with-head, or undirected."""

    kind: str  # "bidirected" | "directed" | "undirected"
    head: int | None = None
    label: str | None = None


@dataclass(frozen=True)
class Template:
    """Per-edge states; None marks an absent edge."""

    states: tuple[EdgeState | None, ...]

    @property
    def bidirected_count(self) -> int:
        return sum(1 for s in self.states if s and s.kind == "bidirected")


def _edge_options(a: int, b: int) -> list[EdgeState | None]:
    return [
        None,
        EdgeState("bidirected"),
        EdgeState("directed", a, "wx"),
        EdgeState("directed", a, "yz"),
        EdgeState("directed", b, "wy"),
        EdgeState("directed", b, "xz"),
        EdgeState("undirected", None, "wz"),
        EdgeState("undirected", None, "xy"),
    ]


def _orientable_indegree_one(graph: SimpleGraph, states) -> bool:
    """Can the undirected edges be directed so every vertex has indegree 1?"""
    base = [0] * graph.vertex_count
    undirected = []
    for e, state in enumerate(states):
        if state is None:
            continue
        u, v = graph.edges[e]
        if state.kind == "bidirected":
            base[u] += 1
            base[v] += 1
        elif state.kind == "directed":
            base[state.head] += 1
        else:
            undirected.append((u, v))
    if any(d > 1 for d in base):
        return False
    for choice in itertools.product((0, 1), repeat=len(undirected)):
        degrees = list(base)
        for (u, v), pick in zip(undirected, choice):
            degrees[v if pick else u] += 1
        if all(d == 1 for d in degrees):
            return True
    return False


def _undirected_subgraph_acyclic(graph: SimpleGraph, states) -> bool:
    parent = list(range(graph.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, state in enumerate(states):
        if state is None or state.kind != "undirected":
            continue
        u, v = graph.edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _undirected_circuits_have_odd_wz(graph: SimpleGraph, states) -> bool:
    """Every circuit among the undirected edges carries an odd number of wz labels."""
    undirected = [e for e, s in enumerate(states) if s and s.kind == "undirected"]
    u_count = len(undirected)
    for mask in range(1, 1 << u_count):
        chosen = [undirected[t] for t in range(u_count) if mask >> t & 1]
        degree: dict[int, int] = {}
        for e in chosen:
            u, v = graph.edges[e]
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        if any(d != 2 for d in degree.values()):
            continue
        # connected 2-regular = a single circuit
        verts = sorted(degree)
        adj: dict[int, list[int]] = {v: [] for v in verts}
        for e in chosen:
            u, v = graph.edges[e]
            adj[u].append(v)
            adj[v].append(u)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            x = stack.pop()
            for yv in adj[x]:
                if yv not in seen:
                    seen.add(yv)
                    stack.append(yv)
        if len(seen) != len(verts):
            continue
        wz = sum(1 for e in chosen if states[e].label == "wz")
        if wz % 2 == 0:
            return False
    return True


def template_is_feasible(graph: SimpleGraph, template: Template, char_two: bool) -> bool:
    states = template.states
    if char_two:
        if not _undirected_subgraph_acyclic(graph, states):
            return False
    else:
        if not _undirected_circuits_have_odd_wz(graph, states):
            return False
    return _orientable_indegree_one(graph, states)


def enumerate_feasible_templates(graph: SimpleGraph, char_two: bool) -> list[Template]:
    """All feasible templates, by brute force over per-edge states."""
    options = [_edge_options(a, b) for a, b in graph.edges]
    out = []
    for combo in itertools.product(*options):
        template = Template(tuple(combo))
        if template_is_feasible(graph, template, char_two):
            out.append(template)
    return out


def template_counts_by_bidirected(templates) -> dict[int, int]:
    counts: dict[int, int] = {}
    for t in templates:
        counts[t.bidirected_count] = counts.get(t.bidirected_count, 0) + 1
    return counts


def predicted_bases_per_template(n: int, m: int, k: int, bidirected: int, char_two: bool) -> Fraction:
    """Closed-form basis count of one feasible template with b bidirected edges."""
    if k < 1:
        raise PreconditionError("need k >= 1")
    per_bidirected = Fraction(4, k) + 12 if char_two else Fraction(3, k) + 13
    return Fraction(4) ** (k * m) * Fraction(k, 4) ** n * per_bidirected**bidirected


def template_of_basis(gm: GadgetMatrix, field: Field, basis_indices) -> Template:
    """Classify a basis of the letter-column matroid by its template.

    ``basis_indices`` index the letter columns (the matroid ground set, in
    label order).  Per edge the intersection size with the edge's letter
    block decides absent/bidirected, and in the one-extra-element case the
    closure of the block in the full matrix decides the direction while the
    doubled copy's letters give the label.
    """
    ground = gm.ground_labels()
    chosen = sorted(int(i) for i in basis_indices)
    if len(set(chosen)) != len(chosen) or any(not 0 <= i < len(ground) for i in chosen):
        raise NotABasisError("invalid ground column indices")
    ground_cols = gm.ground_columns()
    if len(chosen) != gm.target_rank or matrix_rank(
        [ground_cols[i] for i in chosen], field
    ) != gm.target_rank:
        raise NotABasisError("column set is not a basis")
    graph, k = gm.graph, gm.copies
    states: list[EdgeState | None] = []
    for i, (a, b) in enumerate(graph.edges):
        block = [t for t in chosen if ground[t][1] == i]
        size = len(block)
        if size == k:
            states.append(None)
            continue
        if size == k + 2:
            states.append(EdgeState("bidirected"))
            continue
        if size != k + 1:
            raise NotABasisError(f"edge {i} meets the basis in {size} columns")
        by_copy: dict[int, list[str]] = {}
        for t in block:
            letter, _, j = ground[t]
            by_copy.setdefault(j, []).append(letter)
        doubled = [j for j, letters in by_copy.items() if len(letters) == 2]
        if len(doubled) != 1:
            raise NotABasisError(f"edge {i} has no unique doubled copy")
        label = "".join(sorted(by_copy[doubled[0]], key=LETTERS.index))
        block_cols = [ground_cols[t] for t in block]
        base_rank = matrix_rank(block_cols, field)

        def in_closure(label_col) -> bool:
            return matrix_rank(block_cols + [gm.column(label_col)], field) == base_rank

        has_a = in_closure(("v", a))
        has_b = in_closure(("v", b))
        if has_a and has_b:
            raise NotABasisError(f"edge {i} closure captures both endpoints at size k+1")
        if has_a:
            states.append(EdgeState("directed", a, label))
        elif has_b:
            states.append(EdgeState("directed", b, label))
        else:
            states.append(EdgeState("undirected", None, label))
    return Template(tuple(states))


# ---------------------------------------------------------------------------
# perfect matchings


def count_perfect_matchings(graph: SimpleGraph) -> int:
    """Brute-force perfect matching count."""
    n = graph.vertex_count
    if n % 2:
        return 0
    adjacency = {v: set() for v in range(n)}
    for u, v in graph.edges:
        adjacency[u].add(v)
        adjacency[v].add(u)

    def recurse(uncovered: frozenset[int]) -> int:
        if not uncovered:
            return 1
        v = min(uncovered)
        total = 0
        for w in adjacency[v]:
            if w in uncovered and w != v:
                total += recurse(uncovered - {v, w})
        return total

    return recurse(frozenset(range(n)))


@dataclass(frozen=True)
class RecoveryReport:
    field: Field
    b_values: tuple[int, ...]
    b_sources: tuple[str, ...]
    t_values: tuple[int, ...]
    recovered: int
    direct: int

    @property
    def match(self) -> bool:
        return self.recovered == self.direct


def recover_perfect_matchings(
    graph: SimpleGraph, field: Field, direct_limit: int = 100_000
) -> RecoveryReport:
    """Recover the perfect matching count from basis counts of the lifts.

    Basis counts b_k for k = 1 .. n/2 + 1 are obtained by direct enumeration
    while the subset space stays below ``direct_limit`` and from the
    per-template closed form otherwise (legitimized by the partition
    property, which the test suite establishes on directly enumerable
    cases).  Solving the linear system in the template counts then yields
    t_(n/2), the number of perfect matchings.
    """
    n, m = graph.vertex_count, graph.edge_count
    if n % 2:
        raise OddVertexCountError("perfect matching recovery needs an even vertex count")
    char_two = field.is_char_two
    t_true = template_counts_by_bidirected(enumerate_feasible_templates(graph, char_two))
    top = n // 2
    b_values: list[int] = []
    sources: list[str] = []
    for k in range(1, top + 2):
        if comb(4 * m * k, n + m * k) <= direct_limit:
            gm = build_gadget_matrix(graph, k)
            b_k = count_bases(gm.ground_columns(), field, gm.target_rank)
            sources.append("enumerated")
        else:
            total = sum(
                predicted_bases_per_template(n, m, k, j, char_two) * t_true.get(j, 0)
                for j in range(top + 1)
            )
            if total.denominator != 1:
                raise AssertionError("template sum must be an integer")
            b_k = int(total)
            sources.append("template-sum")
        b_values.append(b_k)
    system = ExactMatrix(
        [
            [predicted_bases_per_template(n, m, k, j, char_two) for j in range(top + 1)]
            for k in range(1, top + 2)
        ]
    )
    solution = bareiss_solve(system, b_values)
    t_values = []
    for value in solution:
        if value.denominator != 1 or value < 0:
            raise AssertionError("recovered template counts must be non-negative integers")
        t_values.append(int(value))
    return RecoveryReport(
        field=field,
        b_values=tuple(b_values),
        b_sources=tuple(sources),
        t_values=tuple(t_values),
        recovered=t_values[top],
        direct=count_perfect_matchings(graph),
    )
