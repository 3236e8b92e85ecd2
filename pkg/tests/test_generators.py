import numpy as np
import pytest

from oracles import alpha_enumerate
from tightkernel.catalog import TightKind, complete_graph, kinds_for
from tightkernel.generators import GenerationError, GenSpec, gen_mixed, gen_random_bounded, gen_tight_union
from tightkernel.graph import disjoint_union, validate_instance


def test_k4_union():
    g = gen_tight_union(GenSpec(4, {TightKind.CLIQUE: 10}))
    assert g == disjoint_union([complete_graph(4)] * 10)


def test_running_example_is_deterministic():
    a = gen_tight_union(GenSpec(4, {TightKind.CLIQUE: 10}, extra_vertices=3, seed=1))
    b = gen_tight_union(GenSpec(4, {TightKind.CLIQUE: 10}, extra_vertices=3, seed=1))
    assert a == b and a.n == 43 and a.m == 60


def test_necklaces_with_one_edge():
    g = gen_tight_union(GenSpec(3, {TightKind.DIAMOND_NECKLACE_1: 2}, matching_edges=1, seed=7))
    assert g.n == 12 and g.m == 2 * 8 + 1
    assert validate_instance(g, 3) is None
    assert sum(1 for u, v in g.edges() if u < 6 <= v) == 1


def test_matching_is_a_matching():
    g = gen_tight_union(GenSpec(4, {TightKind.CLIQUE: 20}, extra_vertices=5, matching_edges=12, seed=2))
    base = gen_tight_union(GenSpec(4, {TightKind.CLIQUE: 20}, extra_vertices=5))
    added = set(g.edges()) - set(base.edges())
    ends = [v for e in added for v in e]
    assert len(added) == 12 and len(ends) == len(set(ends))


def test_matching_impossible():
    with pytest.raises(GenerationError):
        gen_tight_union(GenSpec(4, {TightKind.CLIQUE: 1}, matching_edges=1, seed=0))


def test_random_bounded_examples():
    assert gen_random_bounded(0, 3, 10).n == 0
    g = gen_random_bounded(30, 3, 200, 42)
    assert validate_instance(g, 3) is None
    g = gen_random_bounded(5, 4, 5000, 1)
    assert g.m < 10 and validate_instance(g, 4) is None


def test_generators_always_valid():
    rng = np.random.default_rng(0)
    for i in range(2000):
        d = int(rng.choice([3, 4, 5, 6, 8]))
        n = int(rng.integers(0, 60))
        g = gen_random_bounded(n, d, int(rng.integers(0, 4 * n + 1)), i) if i % 2 else gen_mixed(d, n, i)
        assert validate_instance(g, d) is None


@pytest.mark.parametrize("delta", [3, 4, 5])
def test_pure_unions_have_zero_excess(delta):
    kinds = kinds_for(delta)
    for i, kind in enumerate(kinds):
        other = kinds[(i + 1) % len(kinds)]
        g = gen_tight_union(GenSpec(delta, {kind: 1, other: 1}))
        if g.n <= 22:
            assert alpha_enumerate(g) * delta == g.n
