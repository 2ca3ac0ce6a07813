import itertools

import numpy as np
import pytest

from greedoid_tutte import (
    Greedoid,
    closure,
    demo_binary_matrix,
    elements_of,
    enumerate_bases,
    enumerate_feasible_sets,
    is_feasible,
    mask_of,
    parallel_classes,
    path_graph,
    rank_of,
    star_graph,
    thicken,
    to_greedoid,
    verify_family_axioms,
    verify_rank_axioms,
)
from greedoid_tutte.greedoid import rank_size_profile, subset_ranks
from greedoid_tutte.errors import ElementOutOfRangeError, GroundSetTooLargeError

from catalogues import LOOP_GRAPH, TRIANGLE, brute_rank, greedoid_instances

DEMO = to_greedoid(demo_binary_matrix())


def test_demo_feasibility_examples():
    # Ground set {1,2,3,4} in 1-based terms; elements are 0-based here.
    assert is_feasible(DEMO, mask_of([0, 2]))  # {1,3}
    assert not is_feasible(DEMO, mask_of([1]))  # {2}
    assert is_feasible(DEMO, 0)


def test_demo_rank_examples():
    assert rank_of(DEMO, mask_of([0, 1, 2])) == 3  # {1,2,3}
    assert rank_of(DEMO, mask_of([1, 2])) == 0  # {2,3}
    assert rank_of(DEMO, 0) == 0


def test_demo_bases():
    bases = enumerate_bases(DEMO)
    assert [elements_of(b) for b in bases] == [(0, 1, 2), (0, 1, 3), (1, 2, 3)]


def test_star_has_single_basis():
    g = to_greedoid(star_graph(3))
    assert enumerate_bases(g) == [mask_of([0, 1, 2])]


def test_loops_only_greedoid_basis_is_empty():
    g = Greedoid(2, lambda mask: mask == 0)
    assert enumerate_bases(g) == [0]


def test_out_of_range_subset():
    with pytest.raises(ElementOutOfRangeError):
        is_feasible(DEMO, 1 << 10)


def test_closure_on_path():
    g = to_greedoid(path_graph(2))
    assert closure(g, mask_of([0])) == mask_of([0])
    assert closure(g, mask_of([1])) == mask_of([1])
    assert closure(g, g.full_mask) == g.full_mask


def test_closure_properties_exhaustive():
    for name, g in greedoid_instances():
        if g.size > 10:
            continue
        ranks = subset_ranks(g)
        for subset in range(1 << g.size):
            closed = closure(g, subset)
            assert closed & subset == subset, name  # extensive
            assert ranks[closed] == ranks[subset], name  # rank-preserving
            assert closure(g, closed) == closed, name  # idempotent


def test_rank_stable_elements_absorb_jointly():
    # If adding any element of B alone preserves the rank of A, then adding
    # all of B does.
    for name, g in [("triangle", to_greedoid(TRIANGLE)), ("demo", DEMO)]:
        n = g.size
        ranks = subset_ranks(g)
        for a in range(1 << n):
            stable = [e for e in range(n) if ranks[a | (1 << e)] == ranks[a]]
            for size in range(len(stable) + 1):
                for combo in itertools.combinations(stable, size):
                    b = mask_of(combo)
                    assert ranks[a | b] == ranks[a], name


def test_greedy_rank_equals_brute_force_everywhere():
    for name, g in greedoid_instances():
        if g.size > 10:
            continue
        for subset in range(1 << g.size):
            assert rank_of(g, subset) == brute_rank(g, subset), name


def test_subset_ranks_equals_greedy():
    for name, g in greedoid_instances():
        if g.size > 10:
            continue
        ranks = subset_ranks(g)
        for subset in range(1 << g.size):
            assert int(ranks[subset]) == rank_of(g, subset), name


def test_feasibility_iff_rank_equals_size():
    for name, g in greedoid_instances():
        if g.size > 10:
            continue
        for subset in range(1 << g.size):
            assert is_feasible(g, subset) == (rank_of(g, subset) == bin(subset).count("1")), name


def test_profile_counts_all_subsets():
    for name, g in greedoid_instances():
        profile = rank_size_profile(g)
        assert sum(profile.values()) == 1 << g.size, name


def test_parallel_classes_thickened_edge():
    g = to_greedoid(thicken(star_graph(1), 2))
    result = parallel_classes(g)
    assert result.classes == ((0, 1),)
    assert result.loop_class is None


def test_parallel_classes_path():
    result = parallel_classes(to_greedoid(path_graph(2)))
    assert result.classes == ((0,), (1,))


def test_parallel_classes_loop_flagged():
    result = parallel_classes(to_greedoid(LOOP_GRAPH))
    assert result.loop_class == (1,)
    assert (1,) in result.classes


def test_parallel_relation_is_partition_and_loops_cluster():
    for name, g in greedoid_instances():
        if g.size > 10:
            continue
        result = parallel_classes(g)
        flattened = sorted(e for cls in result.classes for e in cls)
        assert flattened == list(range(g.size)), name
        if result.loop_class:
            assert result.loop_class in result.classes, name


def test_thickened_copies_are_parallel():
    for carrier, k in [(star_graph(2), 2), (path_graph(2), 3), (demo_binary_matrix(), 2)]:
        g = to_greedoid(thicken(carrier, k))
        result = parallel_classes(g)
        membership = {}
        for idx, cls in enumerate(result.classes):
            for e in cls:
                membership[e] = idx
        base_size = g.size // k
        for e in range(base_size):
            copies = [e * k + i for i in range(k)]
            assert len({membership[c] for c in copies}) == 1


def test_verify_family_axioms_demo():
    family = enumerate_feasible_sets(DEMO)
    assert verify_family_axioms(DEMO.size, family).ok


def test_verify_family_axioms_gap_witness():
    report = verify_family_axioms(2, [0, mask_of([0, 1])])
    assert not report.ok
    assert report.violations[0].axiom == "G2"
    assert report.violations[0].witness == (((0, 1), ()))


def test_verify_family_axioms_missing_empty_set():
    report = verify_family_axioms(1, [mask_of([0])])
    assert any(v.axiom == "G1" for v in report.violations)


def test_verify_rank_axioms_on_real_tables():
    for name, g in greedoid_instances():
        if g.size > 10:
            continue
        assert verify_rank_axioms(g.size, subset_ranks(g)).ok, name


def test_verify_rank_axioms_violations():
    # GR1: rank above cardinality.
    table = np.zeros(4, dtype=np.int64)
    table[0] = 1
    report = verify_rank_axioms(2, table)
    assert any(v.axiom == "GR1" for v in report.violations)
    # GR2: rank drops when a superset is taken.
    table = np.array([1, 0, 1, 1], dtype=np.int64)
    report = verify_rank_axioms(2, table)
    assert any(v.axiom in ("GR1", "GR2") for v in report.violations)
    # GR3: two rank-preserving elements jump together.
    table = np.array([0, 0, 0, 1], dtype=np.int64)
    report = verify_rank_axioms(2, table)
    assert any(v.axiom == "GR3" for v in report.violations)


def test_enumeration_bound_guard():
    g = Greedoid(21, lambda mask: mask == 0)
    with pytest.raises(GroundSetTooLargeError):
        enumerate_feasible_sets(g)
    assert enumerate_feasible_sets(g, max_elements=21) == [0]
