"""Family-agnostic greedoid interface.

A greedoid is given by its ground-set size and a pure feasibility oracle on
subsets.  Subsets are represented as int bitmasks over element ids
``0 .. size-1`` throughout; :func:`mask_of` and :func:`elements_of` convert
to and from iterables for readability.

Exponential operations (enumerating feasible sets, whole-lattice rank
tables, parallel classes, axiom verification) are guarded by a configurable
ground-set bound.  The default of 20 elements keeps every guarded call near
a million subsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

import numpy as np

from .errors import ElementOutOfRangeError, GroundSetTooLargeError

DEFAULT_MAX_ELEMENTS = 20


def mask_of(elements: Iterable[int], size: int | None = None) -> int:
    mask = 0
    for e in elements:
        if e < 0 or (size is not None and e >= size):
            raise ElementOutOfRangeError(f"element {e} outside ground set")
        mask |= 1 << e
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def _check_bound(size: int, max_elements: int) -> None:
    if size > max_elements:
        raise GroundSetTooLargeError(size, max_elements)


@dataclass(eq=False)
class Greedoid:
    """Ground set plus feasibility oracle, with the overall rank cached.

    The oracle must be a pure function of the subset bitmask with the empty
    set feasible; the exchange axiom is assumed (and can be verified on
    enumerable instances with :func:`verify_family_axioms`).
    """

    size: int
    feasible_mask: Callable[[int], bool]
    name: str = ""
    _rank: int | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("ground set size must be non-negative")
        if not self.feasible_mask(0):
            raise ValueError("the empty set must be feasible")

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def rank(self) -> int:
        if self._rank is None:
            self._rank = len(elements_of(max_feasible_subset(self, self.full_mask)))
        return self._rank

    def _check_subset(self, subset: int) -> None:
        if subset < 0 or subset >> self.size:
            raise ElementOutOfRangeError(
                f"subset {bin(subset)} is not within a {self.size}-element ground set"
            )

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Greedoid{label} on {self.size} elements>"


def is_feasible(greedoid: Greedoid, subset: int) -> bool:
    """Membership of the subset in the feasible family."""
    greedoid._check_subset(subset)
    return bool(greedoid.feasible_mask(subset))


def max_feasible_subset(greedoid: Greedoid, subset: int) -> int:
    """Greedy augmentation inside ``subset``; ties broken by smallest id.

    Every maximal feasible subset of a set has the same cardinality in a
    greedoid, so the greedy result has size equal to the rank.  The returned
    mask itself is the lexicographically least maximal chain's endpoint,
    which makes downstream uses deterministic.
    """
    greedoid._check_subset(subset)
    current = 0
    oracle = greedoid.feasible_mask
    while True:
        remaining = subset & ~current
        grew = False
        while remaining:
            bit = remaining & -remaining
            if oracle(current | bit):
                current |= bit
                grew = True
                break
            remaining ^= bit
        if not grew:
            return current


def rank_of(greedoid: Greedoid, subset: int) -> int:
    """Greedoid rank: size of a maximal feasible subset of ``subset``."""
    return len(elements_of(max_feasible_subset(greedoid, subset)))


def closure(greedoid: Greedoid, subset: int) -> int:
    """All elements whose addition does not raise the rank of ``subset``."""
    greedoid._check_subset(subset)
    base = rank_of(greedoid, subset)
    out = subset
    for e in range(greedoid.size):
        bit = 1 << e
        if subset & bit:
            continue
        if rank_of(greedoid, subset | bit) == base:
            out |= bit
    return out


def enumerate_feasible_sets(
    greedoid: Greedoid, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> list[int]:
    """All feasible subsets, sorted by bitmask value.

    Grows feasible sets one element at a time starting from the empty set;
    the exchange axiom guarantees every feasible set is reached this way.
    Cost is about (number of feasible sets) x (ground size) oracle calls.
    """
    _check_bound(greedoid.size, max_elements)
    oracle = greedoid.feasible_mask
    n = greedoid.size
    seen = {0}
    frontier = [0]
    while frontier:
        fresh = []
        for current in frontier:
            for e in range(n):
                bit = 1 << e
                if current & bit:
                    continue
                candidate = current | bit
                if candidate not in seen and oracle(candidate):
                    seen.add(candidate)
                    fresh.append(candidate)
        frontier = fresh
    return sorted(seen)


def enumerate_bases(greedoid: Greedoid, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[int]:
    """All feasible sets of maximum rank, sorted by bitmask value."""
    feasible = enumerate_feasible_sets(greedoid, max_elements)
    top = max(bin(f).count("1") for f in feasible)
    return [f for f in feasible if bin(f).count("1") == top]


def loops_of(greedoid: Greedoid, max_elements: int = DEFAULT_MAX_ELEMENTS) -> tuple[int, ...]:
    """Elements that belong to no feasible set."""
    used = 0
    for f in enumerate_feasible_sets(greedoid, max_elements):
        used |= f
    return elements_of(greedoid.full_mask & ~used)


def _popcounts(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.uint8)
    for i in range(n):
        pc[1 << i : 1 << (i + 1)] = pc[: 1 << i] + 1
    return pc


def subset_ranks(greedoid: Greedoid, max_elements: int = DEFAULT_MAX_ELEMENTS) -> np.ndarray:
    """Rank of every subset, as an array indexed by bitmask.

    The rank of A is the maximum size of a feasible subset of A, so the wanted
    array is the subset-lattice maximum of |B| * [B feasible].  That maximum is
    taken with the standard one-bit-at-a-time sweep over the lattice, which is
    a pure aggregation of oracle answers: results are identical to running the
    greedy rank on every subset, just much faster.
    """
    _check_bound(greedoid.size, max_elements)
    n = greedoid.size
    pc = _popcounts(n)
    ranks = np.zeros(1 << n, dtype=np.uint8)
    feasible = enumerate_feasible_sets(greedoid, max_elements)
    idx = np.fromiter(feasible, dtype=np.int64, count=len(feasible))
    ranks[idx] = pc[idx]
    for i in range(n):
        view = ranks.reshape(-1, 2, 1 << i)
        np.maximum(view[:, 1, :], view[:, 0, :], out=view[:, 1, :])
    return ranks


def rank_size_profile(
    greedoid: Greedoid, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> dict[tuple[int, int], int]:
    """Count subsets by (rank deficit, size surplus).

    Key (d, s) counts the subsets A with rank(ground) - rank(A) = d and
    |A| - rank(A) = s.  This table is exactly the data the Tutte polynomial
    and all its curve restrictions are built from.
    """
    n = greedoid.size
    ranks = subset_ranks(greedoid, max_elements)
    pc = _popcounts(n)
    top = int(ranks[-1])
    deficit = (top - ranks).astype(np.int64)
    surplus = (pc - ranks).astype(np.int64)
    counts = np.bincount(deficit * (n + 1) + surplus)
    profile: dict[tuple[int, int], int] = {}
    for key in np.nonzero(counts)[0]:
        profile[(int(key) // (n + 1), int(key) % (n + 1))] = int(counts[key])
    return profile


@dataclass(frozen=True)
class ParallelClasses:
    """Partition of the ground set under the parallel-element relation."""

    classes: tuple[tuple[int, ...], ...]
    loop_class: tuple[int, ...] | None


def parallel_classes(
    greedoid: Greedoid, max_elements: int = DEFAULT_MAX_ELEMENTS
) -> ParallelClasses:
    """Partition elements into parallel classes; loops form one class.

    Elements e and f are parallel when rank(A+e) = rank(A+f) = rank(A+e+f)
    for every subset A, which is decided here from the full rank table.
    """
    n = greedoid.size
    _check_bound(n, max_elements)
    ranks = subset_ranks(greedoid, max_elements)
    masks = np.arange(1 << n, dtype=np.int64)
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in range(n):
        for f in range(e + 1, n):
            be, bf = 1 << e, 1 << f
            re = ranks[masks | be]
            rf = ranks[masks | bf]
            if np.array_equal(re, rf) and np.array_equal(re, ranks[masks | be | bf]):
                parent[find(e)] = find(f)

    groups: dict[int, list[int]] = {}
    for e in range(n):
        groups.setdefault(find(e), []).append(e)
    classes = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
    loops = loops_of(greedoid, max_elements)
    loop_class = loops if loops else None
    return ParallelClasses(classes=classes, loop_class=loop_class)


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    witness: tuple
    detail: str


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[AxiomViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


_WITNESS_CAP = 20


def verify_family_axioms(size: int, feasible_sets: Iterable[int]) -> AxiomReport:
    """Check the two feasible-family axioms on an explicit set family.

    Reports the empty-set axiom and, for every pair of feasible sets of
    different sizes, the existence of a single-element feasible extension of
    the smaller inside the larger (with witnesses when it fails).
    """
    family = set(feasible_sets)
    violations: list[AxiomViolation] = []
    if 0 not in family:
        violations.append(AxiomViolation("G1", (), "empty set is not feasible"))
    by_size: dict[int, list[int]] = {}
    for f in family:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    sizes = sorted(by_size)
    for big_size in sizes:
        for small_size in sizes:
            if small_size >= big_size:
                break
            for big in by_size[big_size]:
                for small in by_size[small_size]:
                    extra = big & ~small
                    ok = False
                    while extra:
                        bit = extra & -extra
                        if (small | bit) in family:
                            ok = True
                            break
                        extra ^= bit
                    if not ok:
                        violations.append(
                            AxiomViolation(
                                "G2",
                                (elements_of(big), elements_of(small)),
                                "no single-element feasible extension of the smaller set "
                                "inside the larger",
                            )
                        )
                        if len(violations) >= _WITNESS_CAP:
                            return AxiomReport(tuple(violations))
    return AxiomReport(tuple(violations))


def verify_rank_axioms(size: int, rank_table: Mapping[int, int] | np.ndarray) -> AxiomReport:
    """Check the three rank-function axioms on an explicit rank table.

    The table must cover every subset of the ground set.  Monotonicity is
    verified on covering pairs (A, A+e), which implies it for all inclusions.
    """
    total = 1 << size
    table = np.zeros(total, dtype=np.int64)
    if isinstance(rank_table, np.ndarray):
        table[:] = rank_table
    else:
        if len(rank_table) != total:
            raise ValueError("rank table must cover every subset")
        for mask, value in rank_table.items():
            table[mask] = value
    pc = _popcounts(size).astype(np.int64)
    masks = np.arange(total, dtype=np.int64)
    violations: list[AxiomViolation] = []

    bad = np.nonzero((table < 0) | (table > pc))[0]
    for mask in bad[:_WITNESS_CAP]:
        violations.append(
            AxiomViolation("GR1", (elements_of(int(mask)),), f"rank {int(table[mask])} outside [0, |A|]")
        )

    for e in range(size):
        be = 1 << e
        up = table[masks | be]
        bad = np.nonzero(up < table)[0]
        for mask in bad[:_WITNESS_CAP]:
            violations.append(
                AxiomViolation(
                    "GR2",
                    (elements_of(int(mask)), e),
                    "rank decreases when adding an element",
                )
            )
        if len(violations) >= _WITNESS_CAP:
            return AxiomReport(tuple(violations[:_WITNESS_CAP]))

    for e in range(size):
        be = 1 << e
        re = table[masks | be]
        for f in range(e + 1, size):
            bf = 1 << f
            rf = table[masks | bf]
            both = table[masks | be | bf]
            bad = np.nonzero((re == table) & (rf == table) & (both != table))[0]
            for mask in bad[:_WITNESS_CAP]:
                violations.append(
                    AxiomViolation(
                        "GR3",
                        (elements_of(int(mask)), e, f),
                        "two rank-preserving elements raise the rank together",
                    )
                )
            if len(violations) >= _WITNESS_CAP:
                return AxiomReport(tuple(violations[:_WITNESS_CAP]))

    return AxiomReport(tuple(violations))
