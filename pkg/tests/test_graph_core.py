from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trianglepack import (
    CliqueArrangement,
    GenSpec,
    build_overlap_graph,
    generate,
    sweep_maximal_cliques,
    validate_arrangement,
)
from trianglepack.graph_core import AdjacencyGraph

from conftest import instance


def named_cliques(inst, arr):
    names = inst.names
    return [{names[v] for v in c.members} for c in arr.cliques]


def test_overlap_graph_path(abc_path):
    g = build_overlap_graph(abc_path)
    assert g.edges() == {(0, 1), (1, 2)}


def test_overlap_single_vertex():
    g = build_overlap_graph(instance(("A", 0, 1)))
    assert g.n == 1 and g.edges() == set()


def test_touching_endpoints_are_adjacent():
    g = build_overlap_graph(instance(("A", 1, 2), ("B", 2, 3)))
    assert g.edges() == {(0, 1)}


def test_empty_instance_gives_empty_graph():
    g = build_overlap_graph(instance())
    assert g.n == 0 and g.edges() == set()


def test_rational_endpoints():
    inst = instance(("A", Fraction(1, 3), Fraction(1, 2)), ("B", Fraction(1, 2), 1), ("C", Fraction(2, 3), 1))
    assert build_overlap_graph(inst).edges() == {(0, 1), (1, 2)}


def test_lo_above_hi_rejected():
    with pytest.raises(ValueError):
        instance(("A", 3, 1))


def test_sweep_path(abc_path):
    arr = sweep_maximal_cliques(abc_path)
    assert named_cliques(abc_path, arr) == [{"A", "B"}, {"B", "C"}]
    assert [c.index for c in arr.cliques] == [1, 2]


def test_sweep_common_point():
    inst = instance(("A", 0, 5), ("B", 1, 3), ("C", 2, 9), ("D", 3, 3))
    arr = sweep_maximal_cliques(inst)
    assert arr.t == 1
    assert arr.cliques[0].members == frozenset(range(4))


def test_sweep_disjoint():
    inst = instance(("A", 1, 2), ("B", 3, 4))
    arr = sweep_maximal_cliques(inst)
    assert named_cliques(inst, arr) == [{"A"}, {"B"}]


def test_sweep_twins():
    inst = instance(("A", 0, 1), ("B", 0, 1), ("C", 1, 2))
    arr = sweep_maximal_cliques(inst)
    assert named_cliques(inst, arr) == [{"A", "B", "C"}]


def test_sweep_rejects_empty():
    with pytest.raises(ValueError):
        sweep_maximal_cliques(instance())


def test_validate_reports_gap():
    # A-B, B-D edges, C isolated; B sits at positions 1 and 3
    g = AdjacencyGraph.from_edges(4, [(0, 1), (1, 3)])
    arr = CliqueArrangement.from_sets([{0, 1}, {2}, {1, 3}])
    report = validate_arrangement(g, arr)
    assert ("not-consecutive", 1) in report.violations


def test_validate_reports_uncovered_edge():
    g = AdjacencyGraph.from_edges(3, [(0, 1), (1, 2)])
    arr = CliqueArrangement.from_sets([{0, 1}, {2}])
    report = validate_arrangement(g, arr)
    assert ("uncovered-edge", (1, 2)) in report.violations


def test_validate_reports_non_maximal_and_non_clique():
    g = AdjacencyGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    report = validate_arrangement(g, CliqueArrangement.from_sets([{0, 1}, {0, 1, 2}]))
    assert "non-maximal" in report.kinds()
    g2 = AdjacencyGraph.from_edges(3, [(0, 1), (1, 2)])
    report2 = validate_arrangement(g2, CliqueArrangement.from_sets([{0, 1, 2}]))
    assert "not-a-clique" in report2.kinds()


def test_validate_reports_clique_extendable_by_outside_vertex():
    g = AdjacencyGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    report = validate_arrangement(g, CliqueArrangement.from_sets([{0, 1}, {2}]))
    assert "non-maximal" in report.kinds()


intervals = st.lists(
    st.tuples(st.integers(-20, 20), st.integers(0, 10)).map(lambda p: (p[0], p[0] + p[1])),
    min_size=1, max_size=25,
)


def _inst(pairs):
    return instance(*[(f"v{i}", lo, hi) for i, (lo, hi) in enumerate(pairs)])


@settings(max_examples=300, deadline=None)
@given(intervals)
def test_sweep_arrangement_always_valid(pairs):
    inst = _inst(pairs)
    g = build_overlap_graph(inst)
    arr = sweep_maximal_cliques(inst)
    assert validate_arrangement(g, arr).ok
    assert 1 <= arr.t <= inst.n
    covered_pairs = set()
    for c in arr.cliques:
        ms = sorted(c.members)
        covered_pairs.update((u, v) for i, u in enumerate(ms) for v in ms[i + 1:])
    assert covered_pairs == g.edges()


@settings(max_examples=300, deadline=None)
@given(intervals)
def test_overlap_graph_matches_pairwise_check(pairs):
    g = build_overlap_graph(_inst(pairs))
    expected = {(i, j) for i in range(len(pairs)) for j in range(i + 1, len(pairs))
                if max(pairs[i][0], pairs[j][0]) <= min(pairs[i][1], pairs[j][1])}
    assert g.edges() == expected


@settings(max_examples=300, deadline=None)
@given(intervals)
def test_reflection_reverses_arrangement(pairs):
    inst = _inst(pairs)
    fwd = [c.members for c in sweep_maximal_cliques(inst).cliques]
    back = [c.members for c in sweep_maximal_cliques(inst.reflected()).cliques]
    assert back == fwd[::-1]


@pytest.mark.parametrize("model", ["uniform-random", "unit-interval", "nested-cliques", "single-clique"])
@pytest.mark.parametrize("seed", range(10))
def test_generated_instances_validate(model, seed):
    inst = generate(GenSpec(model, 40, seed))
    assert validate_arrangement(build_overlap_graph(inst), sweep_maximal_cliques(inst)).ok
