"""Concrete carriers: rooted graphs, rooted digraphs and binary matrices.

Each carrier exposes a feasibility oracle over edge/column subsets and a
constructor for the corresponding greedoid:

* rooted graph: a subset is feasible when it is the edge set of a tree
  through the root (the root component of the spanning subgraph is a tree
  containing every chosen edge);
* rooted digraph: same with "arborescence rooted at r" in place of "tree";
* binary matrix: a column subset A is feasible when the top |A| rows of
  those columns form a nonsingular matrix over GF(2).

Edges and columns carry stable ids given by their list position; every
construction elsewhere in the package derives new ids deterministically
from (old id, copy index).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import (
    ElementOutOfRangeError,
    NotConnectedError,
    NotRootConnectedError,
    ParseError,
    PreconditionError,
)
from .greedoid import DEFAULT_MAX_ELEMENTS, Greedoid, enumerate_feasible_sets


@dataclass(frozen=True)
class RootedGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    root: int

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if not 0 <= self.root < self.vertex_count:
            raise ElementOutOfRangeError(f"root {self.root} outside vertex range")
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ElementOutOfRangeError(f"edge ({u}, {v}) outside vertex range")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class RootedDigraph:
    vertex_count: int
    arcs: tuple[tuple[int, int], ...]
    root: int

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple((int(u), int(v)) for u, v in self.arcs))
        if not 0 <= self.root < self.vertex_count:
            raise ElementOutOfRangeError(f"root {self.root} outside vertex range")
        for u, v in self.arcs:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ElementOutOfRangeError(f"arc ({u}, {v}) outside vertex range")

    @property
    def edge_count(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class UnrootedGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ElementOutOfRangeError(f"edge ({u}, {v}) outside vertex range")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class BinaryMatrix:
    """0/1 matrix; columns are the greedoid elements."""

    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        table = tuple(tuple(int(b) for b in row) for row in self.bits)
        object.__setattr__(self, "bits", table)
        if table and any(len(row) != len(table[0]) for row in table):
            raise ValueError("ragged rows")
        if any(b not in (0, 1) for row in table for b in row):
            raise ValueError("entries must be 0 or 1")

    @property
    def row_count(self) -> int:
        return len(self.bits)

    @property
    def col_count(self) -> int:
        return len(self.bits[0]) if self.bits else 0

    @property
    def edge_count(self) -> int:
        return self.col_count

    def column_bits(self) -> tuple[int, ...]:
        """Column c as an int whose bit r is the entry in row r."""
        return tuple(
            sum(self.bits[r][c] << r for r in range(self.row_count))
            for c in range(self.col_count)
        )


Carrier = Union[RootedGraph, RootedDigraph, BinaryMatrix]


# ---------------------------------------------------------------------------
# feasibility oracles


def branching_feasibility(graph: RootedGraph) -> Callable[[int], bool]:
    """Oracle: chosen edges form a tree through the root.

    Union-find over the endpoints: any cycle is fatal (either it sits in the
    root component, which then is not a tree, or it sits elsewhere, where no
    edge is allowed at all), and afterwards every chosen edge must lie in the
    root's component.
    """
    edges = graph.edges
    root = graph.root
    nv = graph.vertex_count

    def oracle(mask: int) -> bool:
        if mask == 0:
            return True
        parent = list(range(nv))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        chosen = []
        m = mask
        e = 0
        while m:
            if m & 1:
                u, v = edges[e]
                ru, rv = find(u), find(v)
                if ru == rv:
                    return False
                parent[ru] = rv
                chosen.append(u)
            m >>= 1
            e += 1
        target = find(root)
        return all(find(u) == target for u in chosen)

    return oracle


def directed_branching_feasibility(digraph: RootedDigraph) -> Callable[[int], bool]:
    """Oracle: chosen arcs form an arborescence rooted at the root.

    Breadth-first search from the root over the chosen arcs must reach the
    tail of every chosen arc, and the chosen arcs must count one less than
    the reached vertices (tree condition on the underlying graph).
    """
    arcs = digraph.arcs
    root = digraph.root

    def oracle(mask: int) -> bool:
        if mask == 0:
            return True
        chosen = []
        m = mask
        e = 0
        while m:
            if m & 1:
                chosen.append(arcs[e])
            m >>= 1
            e += 1
        out: dict[int, list[int]] = {}
        for u, v in chosen:
            out.setdefault(u, []).append(v)
        reached = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for v in out.get(u, ()):
                if v not in reached:
                    reached.add(v)
                    stack.append(v)
        if any(u not in reached for u, _ in chosen):
            return False
        return len(chosen) == len(reached) - 1

    return oracle


def binary_feasibility(matrix: BinaryMatrix) -> Callable[[int], bool]:
    """Oracle: top-|A| rows of the chosen columns are nonsingular over GF(2).

    A subset larger than the row count is infeasible; the empty matrix counts
    as nonsingular.
    """
    col_bits = matrix.column_bits()
    rows = matrix.row_count

    def oracle(mask: int) -> bool:
        p = bin(mask).count("1")
        if p == 0:
            return True
        if p > rows:
            return False
        window = (1 << p) - 1
        basis: dict[int, int] = {}
        m = mask
        c = 0
        while m:
            if m & 1:
                vec = col_bits[c] & window
                while vec:
                    high = vec.bit_length() - 1
                    if high in basis:
                        vec ^= basis[high]
                    else:
                        basis[high] = vec
                        break
                if vec == 0:
                    return False
            m >>= 1
            c += 1
        return True

    return oracle


def branching_greedoid(graph: RootedGraph) -> Greedoid:
    return Greedoid(graph.edge_count, branching_feasibility(graph), name="branching")


def directed_branching_greedoid(digraph: RootedDigraph) -> Greedoid:
    return Greedoid(digraph.edge_count, directed_branching_feasibility(digraph), name="directed branching")


def binary_greedoid(matrix: BinaryMatrix) -> Greedoid:
    return Greedoid(matrix.col_count, binary_feasibility(matrix), name="binary")


def to_greedoid(carrier: Carrier | Greedoid) -> Greedoid:
    if isinstance(carrier, Greedoid):
        return carrier
    if isinstance(carrier, RootedGraph):
        return branching_greedoid(carrier)
    if isinstance(carrier, RootedDigraph):
        return directed_branching_greedoid(carrier)
    if isinstance(carrier, BinaryMatrix):
        return binary_greedoid(carrier)
    raise TypeError(f"not a carrier: {carrier!r}")


# ---------------------------------------------------------------------------
# connectivity helpers


def root_component_vertices(graph: RootedGraph) -> frozenset[int]:
    adj: dict[int, list[int]] = {}
    for u, v in graph.edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    reached = {graph.root}
    stack = [graph.root]
    while stack:
        u = stack.pop()
        for v in adj.get(u, ()):
            if v not in reached:
                reached.add(v)
                stack.append(v)
    return frozenset(reached)


def graph_is_connected(graph: RootedGraph | UnrootedGraph) -> bool:
    if isinstance(graph, UnrootedGraph):
        if graph.vertex_count == 0:
            return True
        graph = RootedGraph(graph.vertex_count, graph.edges, 0)
    return len(root_component_vertices(graph)) == graph.vertex_count


def reachable_from_root(digraph: RootedDigraph) -> frozenset[int]:
    out: dict[int, list[int]] = {}
    for u, v in digraph.arcs:
        out.setdefault(u, []).append(v)
    reached = {digraph.root}
    stack = [digraph.root]
    while stack:
        u = stack.pop()
        for v in out.get(u, ()):
            if v not in reached:
                reached.add(v)
                stack.append(v)
    return frozenset(reached)


def digraph_is_root_connected(digraph: RootedDigraph) -> bool:
    return len(reachable_from_root(digraph)) == digraph.vertex_count


def require_connected(graph: RootedGraph) -> None:
    if not graph_is_connected(graph):
        raise NotConnectedError("rooted graph is not connected")


def require_root_connected(digraph: RootedDigraph) -> None:
    if not digraph_is_root_connected(digraph):
        raise NotRootConnectedError("digraph is not root-connected")


def digraph_has_directed_cycle(digraph: RootedDigraph) -> bool:
    out: dict[int, list[int]] = {}
    for u, v in digraph.arcs:
        if u == v:
            return True
        out.setdefault(u, []).append(v)
    state = {}  # 1 = on stack, 2 = done

    def visit(u: int) -> bool:
        state[u] = 1
        for v in out.get(u, ()):
            mark = state.get(v)
            if mark == 1:
                return True
            if mark is None and visit(v):
                return True
        state[u] = 2
        return False

    return any(state.get(u) is None and visit(u) for u in range(digraph.vertex_count))


def sink_count(digraph: RootedDigraph) -> int:
    """Non-isolated vertices with no outgoing arc."""
    has_out = set(u for u, _ in digraph.arcs)
    touched = set(u for u, _ in digraph.arcs) | set(v for _, v in digraph.arcs)
    return sum(1 for v in touched if v not in has_out)


# ---------------------------------------------------------------------------
# standard small families


def path_graph(k: int) -> RootedGraph:
    """Path with k edges, rooted at a leaf."""
    return RootedGraph(k + 1, tuple((i, i + 1) for i in range(k)), 0)


def star_graph(k: int) -> RootedGraph:
    """Star with k edges, rooted at the center."""
    return RootedGraph(k + 1 if k else 1, tuple((0, i + 1) for i in range(k)), 0)


def directed_path(k: int) -> RootedDigraph:
    """Directed path with k arcs pointing away from the root leaf."""
    return RootedDigraph(k + 1, tuple((i, i + 1) for i in range(k)), 0)


def directed_star(k: int) -> RootedDigraph:
    """Star with k arcs emanating from the root."""
    return RootedDigraph(k + 1 if k else 1, tuple((0, i + 1) for i in range(k)), 0)


def identity_matrix(k: int) -> BinaryMatrix:
    return BinaryMatrix(tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)))


_STANDARD = {
    "path": path_graph,
    "star": star_graph,
    "dpath": directed_path,
    "dstar": directed_star,
    "identity": identity_matrix,
}


def standard_family(kind: str, k: int) -> Carrier:
    if k < 0:
        raise PreconditionError("family size must be non-negative")
    try:
        return _STANDARD[kind](k)
    except KeyError:
        raise ParseError(f"unknown family {kind!r}; choose from {sorted(_STANDARD)}") from None


def demo_binary_matrix() -> BinaryMatrix:
    """3x4 binary matrix whose greedoid has exactly nine feasible sets."""
    return BinaryMatrix(((1, 0, 0, 1), (1, 0, 1, 0), (0, 1, 1, 1)))


# ---------------------------------------------------------------------------
# binary matrix utilities


def gf2_row_rank(matrix: BinaryMatrix) -> int:
    basis: dict[int, int] = {}
    for row in matrix.bits:
        vec = sum(b << i for i, b in enumerate(row))
        while vec:
            high = vec.bit_length() - 1
            if high in basis:
                vec ^= basis[high]
            else:
                basis[high] = vec
                break
    return len(basis)


def add_row(matrix: BinaryMatrix, i: int, j: int) -> BinaryMatrix:
    """Add row i to row j over GF(2), for i < j."""
    if not 0 <= i < j < matrix.row_count:
        raise PreconditionError("need row indices i < j inside the matrix")
    rows = [list(r) for r in matrix.bits]
    rows[j] = [a ^ b for a, b in zip(rows[j], rows[i])]
    return BinaryMatrix(tuple(tuple(r) for r in rows))


def row_add_isomorphism_check(
    matrix: BinaryMatrix, i: int, j: int, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> bool:
    """Adding row i to row j (i < j) must not change the feasible family."""
    before = enumerate_feasible_sets(binary_greedoid(matrix), max_elements)
    after = enumerate_feasible_sets(binary_greedoid(add_row(matrix, i, j)), max_elements)
    return before == after


# ---------------------------------------------------------------------------
# file formats


def parse_graph_text(text: str) -> RootedGraph | RootedDigraph | UnrootedGraph:
    """Parse the edge-list format.

    Lines: ``root <v>`` (at most once), then ``edge <u> <v>`` for undirected
    edges or ``arc <u> <v>`` for directed ones; mixing edge and arc lines is
    an error.  Vertices are 0-based; the vertex count is one more than the
    largest mentioned id.  Files without a root line parse as unrooted graphs
    (and cannot contain arcs).
    """
    root: int | None = None
    pairs: list[tuple[int, int]] = []
    kinds: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "root":
            if root is not None:
                raise ParseError(f"line {lineno}: duplicate root line")
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'root <v>'")
            root = int(parts[1])
        elif parts[0] in ("edge", "arc"):
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected '{parts[0]} <u> <v>'")
            kinds.add(parts[0])
            pairs.append((int(parts[1]), int(parts[2])))
        else:
            raise ParseError(f"line {lineno}: unknown directive {parts[0]!r}")
    if len(kinds) > 1:
        raise ParseError("a file may not mix edge and arc lines")
    mentioned = [root] if root is not None else []
    mentioned += [u for u, _ in pairs] + [v for _, v in pairs]
    if any(v < 0 for v in mentioned):
        raise ParseError("vertex ids must be non-negative")
    count = max(mentioned, default=-1) + 1
    directed = kinds == {"arc"}
    if root is None:
        if directed:
            raise ParseError("arc lines require a root line")
        return UnrootedGraph(max(count, 0), tuple(pairs))
    if directed:
        return RootedDigraph(count, tuple(pairs), root)
    return RootedGraph(count, tuple(pairs), root)


def parse_matrix_text(text: str) -> BinaryMatrix:
    """Parse one row of contiguous 0/1 characters per line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise ParseError(f"line {lineno}: matrix rows must be 0/1 strings")
        rows.append(tuple(int(ch) for ch in line))
    if not rows:
        raise ParseError("empty matrix file")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("matrix rows must all have the same length")
    return BinaryMatrix(tuple(rows))


def parse_carrier_text(text: str) -> Carrier | UnrootedGraph:
    """Sniff the format: 0/1 rows mean a binary matrix, otherwise edge lists."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if set(line) <= {"0", "1"}:
            return parse_matrix_text(text)
        return parse_graph_text(text)
    raise ParseError("empty carrier file")


def format_carrier(carrier: Carrier | UnrootedGraph) -> str:
    if isinstance(carrier, BinaryMatrix):
        return "\n".join("".join(str(b) for b in row) for row in carrier.bits) + "\n"
    lines = []
    if isinstance(carrier, RootedGraph):
        lines.append(f"root {carrier.root}")
        lines += [f"edge {u} {v}" for u, v in carrier.edges]
    elif isinstance(carrier, RootedDigraph):
        lines.append(f"root {carrier.root}")
        lines += [f"arc {u} {v}" for u, v in carrier.arcs]
    elif isinstance(carrier, UnrootedGraph):
        lines += [f"edge {u} {v}" for u, v in carrier.edges]
    else:
        raise TypeError(f"not a carrier: {carrier!r}")
    return "\n".join(lines) + "\n"
