import pytest

from trianglepack import GenSpec, brute_force_max_packing, generate, solve
from trianglepack.fileio import format_intervals
from trianglepack.instance_gen import MODELS, SplitMix64

from conftest import prepared


def test_splitmix64_reference_stream():
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


@pytest.mark.parametrize("model", MODELS)
def test_determinism(model):
    n = 12
    first = format_intervals(generate(GenSpec(model, n, 99)))
    assert format_intervals(generate(GenSpec(model, n, 99))) == first
    assert generate(GenSpec(model, n, 99)).n == n


def test_seed_changes_output():
    assert generate(GenSpec("uniform-random", 30, 1)) != generate(GenSpec("uniform-random", 30, 2))


def test_disjoint_triangles_nine():
    _, arr = prepared(generate(GenSpec("disjoint-triangles", 9, 5)))
    assert solve(arr).count == 3


def test_single_clique_ten():
    _, arr = prepared(generate(GenSpec("single-clique", 10, 5)))
    assert arr.t == 1
    assert solve(arr).count == 3


def test_unit_interval_lengths():
    inst = generate(GenSpec("unit-interval", 20, 3, {"length": 4}))
    assert all(iv.hi - iv.lo == 4 for iv in inst.intervals)


def test_nested_cliques_block_count():
    _, arr = prepared(generate(GenSpec("nested-cliques", 40, 3, {"cliques": 5, "shared": 2})))
    assert arr.t == 5
    assert all(len(a.members & b.members) == 2 for a, b in zip(arr.cliques, arr.cliques[1:]))


@pytest.mark.parametrize("spec", [
    GenSpec("disjoint-triangles", 8, 0),
    GenSpec("uniform-random", 0, 0),
    GenSpec("nested-cliques", 5, 0, {"cliques": 4, "shared": 2}),
    GenSpec("nested-cliques", 5, 0, {"cliques": 0}),
    GenSpec("bogus", 5, 0),
])
def test_rejects_bad_specs(spec):
    with pytest.raises(ValueError):
        generate(spec)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_disjoint_triangles_oracle_count(m):
    g, _ = prepared(generate(GenSpec("disjoint-triangles", 3 * m, m)))
    assert brute_force_max_packing(g).count == m
