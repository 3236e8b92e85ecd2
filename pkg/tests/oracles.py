"""Reference implementations used only by the tests.

They share no code with the package beyond the Graph container and the
catalog constructors that define what a tight graph is.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import numpy as np

from tightkernel.catalog import TightKind, make_tight
from tightkernel.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def alpha_enumerate(g: Graph) -> int:
    """Largest independent subset by checking all 2^n subsets (n ≤ 22)."""
    n = g.n
    if n == 0:
        return 0
    assert n <= 22
    masks = np.arange(1 << n, dtype=np.uint32)
    bad = np.zeros(masks.shape, dtype=bool)
    for u, v in g.edges():
        bad |= ((masks >> u) & (masks >> v) & 1).astype(bool)
    sizes = np.zeros(masks.shape, dtype=np.uint8)
    for i in range(n):
        sizes += ((masks >> i) & 1).astype(np.uint8)
    return int(sizes[~bad].max())


def alpha_networkx(g: Graph) -> int:
    """α via a maximum clique of the complement."""
    if g.n == 0:
        return 0
    comp = nx.complement(to_nx(g))
    _, weight = nx.max_weight_clique(comp, weight=None)
    return weight


def is_independent(g: Graph, vs) -> bool:
    vs = list(vs)
    return all(not g.has_edge(a, b) for a, b in combinations(vs, 2))


def tight_templates(delta: int):
    return [(k, to_nx(make_tight(k, delta))) for k in TightKind if k.valid_for(delta)]


def delta_free_enumerate(g: Graph, delta: int) -> set[int]:
    """Vertices lying in no induced tight subgraph, by enumerating subsets."""
    h = to_nx(g)
    covered: set[int] = set()
    for kind, t in tight_templates(delta):
        size, m = t.number_of_nodes(), t.number_of_edges()
        degs = sorted(d for _, d in t.degree())
        for vs in combinations(range(g.n), size):
            if covered.issuperset(vs):
                continue
            sub = h.subgraph(vs)
            if sub.number_of_edges() != m or sorted(d for _, d in sub.degree()) != degs:
                continue
            if nx.is_isomorphic(sub, t):
                covered.update(vs)
    return set(range(g.n)) - covered


def petersen() -> Graph:
    from tightkernel.graph import build_graph
    return build_graph(10, list(nx.petersen_graph().edges()))
