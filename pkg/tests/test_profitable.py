import pytest

from tightkernel.catalog import complete_graph
from tightkernel.graph import build_graph, disjoint_union, induced_subgraph
from tightkernel.profitable import (double_necklace_gadget, necklace_triangle_gadget, check_profitable,
                                    find_nibble_target, nibble_bound, nibble_phase)
from tightkernel.generators import gen_mixed


def near_clique(delta):
    return build_graph(delta + 1, [e for e in complete_graph(delta + 1).edges() if e != (0, 1)])


def test_nibble_bound():
    assert [nibble_bound(d) for d in (3, 4, 7, 8, 10)] == [10, 10, 10, 11, 13]


def test_near_clique_profitable():
    assert check_profitable(near_clique(4), range(5), 4) == (0, 1)


def test_double_necklace_profitable():
    g = double_necklace_gadget()
    s = check_profitable(g, range(10), 3)
    assert len(s) == 4
    assert all(g.degree(v) == 3 for v in s)


def test_clique_not_profitable():
    assert check_profitable(complete_graph(4), range(4), 4) is None


def test_oversized_set_rejected():
    g = build_graph(11, [])
    with pytest.raises(ValueError):
        check_profitable(g, range(11), 3)


def test_targets():
    assert find_nibble_target(near_clique(4), 4) == (0, 1, 2, 3, 4)
    assert find_nibble_target(disjoint_union([complete_graph(4)] * 5), 4) is None
    assert find_nibble_target(necklace_triangle_gadget(), 3) == tuple(range(7))


def test_nibble_phase_examples():
    assert nibble_phase(disjoint_union([complete_graph(5)] * 3), 5) == ((), [])
    assert nibble_phase(near_clique(4), 4) == (tuple(range(5)), [tuple(range(5))])
    c, nibbles = nibble_phase(disjoint_union([near_clique(4)] * 2), 4)
    assert c == tuple(range(10))
    assert nibbles == [tuple(range(5)), tuple(range(5, 10))]


@pytest.mark.parametrize("delta", [3, 4, 5, 6])
def test_nibbles_reach_fixed_point_and_stay_profitable(delta):
    for seed in range(25):
        g = gen_mixed(delta, 60, seed)
        c, nibbles = nibble_phase(g, delta)
        removed = set()
        for z in nibbles:
            assert len(z) <= min(nibble_bound(delta), delta + 7)
            rest, mapping = induced_subgraph(g, [v for v in range(g.n) if v not in removed])
            index = {old: new for new, old in enumerate(mapping)}
            assert check_profitable(rest, [index[v] for v in z], delta) is not None
            removed.update(z)
        rest, _ = induced_subgraph(g, [v for v in range(g.n) if v not in removed])
        assert find_nibble_target(rest, delta) is None
