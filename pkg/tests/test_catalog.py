import networkx as nx
import pytest

from oracles import alpha_enumerate, delta_free_enumerate, petersen, to_nx
from tightkernel.catalog import (Family, TightKind, classify_tight, complete_graph, delta_free_vertices,
                                 find_structures, free_diamonds_and_m, kinds_for, make_tight)
from tightkernel.generators import gen_mixed, gen_random_bounded
from tightkernel.graph import build_graph, disjoint_union, validate_instance

PAIRS = [(k, d) for d in (3, 4, 5, 6) for k in kinds_for(d)]

# vertex counts and independence numbers, fixed by hand
SIZES = {
    TightKind.C5_BOX_K2: 10, TightKind.C8_SQUARED: 8, TightKind.EXTENDED_CLIQUE: 8,
    TightKind.EXTENDED_DOUBLE_CLIQUE: 12, TightKind.DIAMOND_NECKLACE_1: 6, TightKind.DIAMOND_NECKLACE_2: 9,
    TightKind.DIAMOND_NECKLACE_3: 12, TightKind.HAVEL_NECKLACE_1: 9, TightKind.HAVEL_NECKLACE_2: 12,
    TightKind.TRIANGLE_DOMINATED_6_CYCLE: 12,
}
DIAMOND = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.mark.parametrize("kind,delta", PAIRS, ids=lambda x: getattr(x, "value", x))
def test_catalog_graph_is_tight(kind, delta):
    h = make_tight(kind, delta)
    assert h.n == (delta if kind is TightKind.CLIQUE else SIZES[kind])
    assert h.max_degree() <= delta
    assert validate_instance(h, delta) is None
    assert nx.is_connected(to_nx(h))
    assert alpha_enumerate(h) * delta == h.n


@pytest.mark.parametrize("kind,delta", PAIRS, ids=lambda x: getattr(x, "value", x))
def test_classify_round_trip(kind, delta):
    assert classify_tight(make_tight(kind, delta), delta) is kind


def test_kind_delta_mismatch():
    with pytest.raises(ValueError):
        make_tight(TightKind.C8_SQUARED, 3)


def test_c8_squared_edges():
    g = make_tight(TightKind.C8_SQUARED, 4)
    assert set(g.edges()) == {tuple(sorted((i, (i + s) % 8))) for i in range(8) for s in (1, 2)}


def test_havel_necklace_shape():
    g = make_tight(TightKind.HAVEL_NECKLACE_1, 3)
    tri = [c for c in nx.enumerate_all_cliques(to_nx(g)) if len(c) == 3]
    assert len(tri) == 2 and g.n == 9 and g.max_degree() == 3


def test_classify_negative():
    assert classify_tight(make_tight(TightKind.C8_SQUARED, 4), 5) is None
    assert classify_tight(build_graph(5, [(i, (i + 1) % 5) for i in range(5)]), 3) is None
    assert classify_tight(complete_graph(4), 4) is TightKind.CLIQUE


def test_find_tight_components():
    g = disjoint_union([make_tight(TightKind.C8_SQUARED, 4)] * 3)
    assert [len(s) for s in find_structures(g, 4, Family.TIGHT_COMPONENTS)] == [8, 8, 8]


def test_find_triangles_and_diamonds():
    assert find_structures(petersen(), 3, Family.TRIANGLES) == []
    assert find_structures(complete_graph(4), 3, Family.DIAMONDS) == []
    assert find_structures(DIAMOND, 3, "diamonds") == [(0, 1, 2, 3)]


def test_family_delta_mismatch():
    with pytest.raises(ValueError):
        find_structures(petersen(), 3, Family.EXTENDED_CLIQUES)
    with pytest.raises(ValueError):
        find_structures(complete_graph(4), 4, Family.NECKLACES)


@pytest.mark.parametrize("family,delta", [(Family.EXTENDED_CLIQUES, 4), (Family.NECKLACES, 3)])
def test_scans_are_disjoint(family, delta):
    for seed in range(20):
        g = gen_mixed(delta, 80, seed)
        found = find_structures(g, delta, family)
        flat = [v for s in found for v in s]
        assert len(flat) == len(set(flat))


def test_delta_free_examples():
    assert delta_free_vertices(petersen(), 3) == tuple(range(10))
    assert delta_free_vertices(complete_graph(4), 4) == ()
    assert delta_free_vertices(DIAMOND, 3) == ()


def test_free_diamonds_examples():
    assert free_diamonds_and_m(petersen()) == ([], 10, 0)
    assert free_diamonds_and_m(DIAMOND) == ([(0, 1, 2, 3)], 0, 1)
    assert free_diamonds_and_m(make_tight(TightKind.DIAMOND_NECKLACE_1, 3)) == ([], 0, 0)
    with pytest.raises(ValueError):
        free_diamonds_and_m(complete_graph(4), 4)


@pytest.mark.parametrize("delta", [3, 4, 5])
def test_delta_free_matches_enumeration(delta):
    graphs = [gen_mixed(delta, 16, s) for s in range(12)]
    graphs += [gen_random_bounded(14, delta, 40, s) for s in range(6)]
    for g in graphs:
        assert set(delta_free_vertices(g, delta)) == delta_free_enumerate(g, delta)
