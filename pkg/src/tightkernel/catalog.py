"""The Δ-tight graph catalog: constructors, recognizers and structure scans.

A graph is Δ-tight when it is ``K_Δ`` or one of a handful of fixed small
graphs (all with independence number ``|V|/Δ``):

* Δ=5: ``C5 ⊠ K2``;
* Δ=4: ``C8²``, the extended clique and the extended double-clique;
* Δ=3: diamond necklaces with one, two or three diamonds, Havel necklaces
  with one or two middle pieces, and the triangle-dominated 6-cycle.

Edge tables below use a fixed labelling; in a diamond the two hubs (the
adjacent degree-3 pair) come first, then the two tips.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .graph import Graph, build_graph, components_of, induced_subgraph
from .matching import Pattern, all_occurrences, cliques_with_min, is_isomorphic, occurrences_with_min


class TightKind(enum.Enum):
    CLIQUE = "clique"
    C5_BOX_K2 = "c5_box_k2"
    C8_SQUARED = "c8_squared"
    EXTENDED_CLIQUE = "extended_clique"
    EXTENDED_DOUBLE_CLIQUE = "extended_double_clique"
    DIAMOND_NECKLACE_1 = "diamond_necklace_1"
    DIAMOND_NECKLACE_2 = "diamond_necklace_2"
    DIAMOND_NECKLACE_3 = "diamond_necklace_3"
    HAVEL_NECKLACE_1 = "havel_necklace_1"
    HAVEL_NECKLACE_2 = "havel_necklace_2"
    TRIANGLE_DOMINATED_6_CYCLE = "triangle_dominated_6_cycle"

    def valid_for(self, delta: int) -> bool:
        required = _KIND_DELTA.get(self)
        return delta >= 3 and (required is None or required == delta)

    def size(self, delta: int) -> int:
        return delta if self is TightKind.CLIQUE else _SIZES[self]

    @property
    def is_necklace(self) -> bool:
        return self in NECKLACE_KINDS


_KIND_DELTA = {
    TightKind.C5_BOX_K2: 5,
    TightKind.C8_SQUARED: 4,
    TightKind.EXTENDED_CLIQUE: 4,
    TightKind.EXTENDED_DOUBLE_CLIQUE: 4,
    TightKind.DIAMOND_NECKLACE_1: 3,
    TightKind.DIAMOND_NECKLACE_2: 3,
    TightKind.DIAMOND_NECKLACE_3: 3,
    TightKind.HAVEL_NECKLACE_1: 3,
    TightKind.HAVEL_NECKLACE_2: 3,
    TightKind.TRIANGLE_DOMINATED_6_CYCLE: 3,
}

_SIZES = {
    TightKind.C5_BOX_K2: 10,
    TightKind.C8_SQUARED: 8,
    TightKind.EXTENDED_CLIQUE: 8,
    TightKind.EXTENDED_DOUBLE_CLIQUE: 12,
    TightKind.DIAMOND_NECKLACE_1: 6,
    TightKind.DIAMOND_NECKLACE_2: 9,
    TightKind.DIAMOND_NECKLACE_3: 12,
    TightKind.HAVEL_NECKLACE_1: 9,
    TightKind.HAVEL_NECKLACE_2: 12,
    TightKind.TRIANGLE_DOMINATED_6_CYCLE: 12,
}

NECKLACE_KINDS = (
    TightKind.DIAMOND_NECKLACE_1,
    TightKind.DIAMOND_NECKLACE_2,
    TightKind.DIAMOND_NECKLACE_3,
    TightKind.HAVEL_NECKLACE_1,
    TightKind.HAVEL_NECKLACE_2,
)


class Family(enum.Enum):
    TIGHT_COMPONENTS = "tight_components"
    EXTENDED_CLIQUES = "extended_cliques"
    NECKLACES = "necklaces"
    DIAMONDS = "diamonds"
    TRIANGLES = "triangles"
    DELTA_CLIQUES = "delta_cliques"


@dataclass(frozen=True)
class TightPiece:
    kind: TightKind
    vertices: tuple[int, ...]


def _diamond(h1, h2, t1, t2):
    return [(h1, h2), (h1, t1), (h1, t2), (h2, t1), (h2, t2)]


def _edges_c5_box_k2():
    # vertex 2*i + a is copy a of cycle vertex i
    out = []
    for i in range(5):
        out.append((2 * i, 2 * i + 1))
        j = (i + 1) % 5
        for a in range(2):
            for b in range(2):
                out.append((2 * i + a, 2 * j + b))
    return out


def _edges_c8_squared():
    return [(i, (i + d) % 8) for i in range(8) for d in (1, 2)]


def _edges_extended_clique():
    # K4 on 0..3; 4 and 5 each see two clique vertices; 4,5,6,7 form a
    # diamond with hubs 6,7 (the attachments, degree 3)
    k4 = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    return k4 + [(4, 0), (4, 3), (5, 1), (5, 2)] + _diamond(6, 7, 4, 5)


def _edges_extended_double_clique():
    k4a = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    k4b = [(a + 6, b + 6) for a, b in k4a]
    return (k4a + [(4, 0), (4, 3), (5, 1), (5, 2)]
            + k4b + [(10, 6), (10, 9), (11, 7), (11, 8)]
            + [(10, 4), (11, 5), (10, 5), (11, 4)])


def _edges_diamond_necklace(d):
    if d == 1:
        return _diamond(0, 1, 2, 3) + [(2, 4), (3, 5), (4, 5)]
    if d == 2:
        return (_diamond(0, 1, 2, 3) + _diamond(4, 5, 6, 7)
                + [(2, 6), (3, 8), (8, 7)])
    return (_diamond(0, 1, 2, 3) + _diamond(4, 5, 6, 7) + _diamond(8, 9, 10, 11)
            + [(2, 6), (7, 10), (11, 3)])


def _edges_havel_necklace(h):
    # triangles {0,1,2} and {3,4,5} joined by 0-3; 6 sees 1 and 4, 7 sees 2 and 5
    base = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3),
            (1, 6), (6, 4), (2, 7), (7, 5)]
    if h == 1:
        return base + [(6, 8), (8, 7)]
    return base + _diamond(8, 10, 9, 11) + [(6, 9), (7, 11)]


def _edges_triangle_dominated_6_cycle():
    tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    spokes = [(6, 0), (7, 1), (8, 2), (9, 3), (10, 4), (11, 5)]
    # x1-y1-x2-y3-x3-y2-x1 with x = 6,7,8 and y = 9,10,11
    hexagon = [(6, 9), (9, 7), (7, 11), (11, 8), (8, 10), (10, 6)]
    return tri + spokes + hexagon


_EDGE_TABLE = {
    TightKind.C5_BOX_K2: _edges_c5_box_k2,
    TightKind.C8_SQUARED: _edges_c8_squared,
    TightKind.EXTENDED_CLIQUE: _edges_extended_clique,
    TightKind.EXTENDED_DOUBLE_CLIQUE: _edges_extended_double_clique,
    TightKind.DIAMOND_NECKLACE_1: lambda: _edges_diamond_necklace(1),
    TightKind.DIAMOND_NECKLACE_2: lambda: _edges_diamond_necklace(2),
    TightKind.DIAMOND_NECKLACE_3: lambda: _edges_diamond_necklace(3),
    TightKind.HAVEL_NECKLACE_1: lambda: _edges_havel_necklace(1),
    TightKind.HAVEL_NECKLACE_2: lambda: _edges_havel_necklace(2),
    TightKind.TRIANGLE_DOMINATED_6_CYCLE: _edges_triangle_dominated_6_cycle,
}


def complete_graph(n: int) -> Graph:
    return Graph([tuple(u for u in range(n) if u != v) for v in range(n)])


def make_tight(kind: TightKind, delta: int) -> Graph:
    """Canonical labelled copy of a Δ-tight graph."""
    if not kind.valid_for(delta):
        raise ValueError(f"{kind.value} is not {delta}-tight")
    if kind is TightKind.CLIQUE:
        return complete_graph(delta)
    return build_graph(_SIZES[kind], _EDGE_TABLE[kind]())


def kinds_for(delta: int) -> list[TightKind]:
    return [k for k in TightKind if k.valid_for(delta)]


@lru_cache(maxsize=None)
def tight_pattern(kind: TightKind, delta: int) -> Pattern:
    return Pattern(make_tight(kind, delta), name=kind.value)


@lru_cache(maxsize=None)
def diamond_pattern() -> Pattern:
    return Pattern(build_graph(4, _diamond(0, 1, 2, 3)), name="diamond")


def classify_tight(g: Graph, delta: int) -> TightKind | None:
    """Kind of ``g`` if it is isomorphic to a Δ-tight graph, else None."""
    for kind in kinds_for(delta):
        if g.n != kind.size(delta):
            continue
        if kind is TightKind.CLIQUE:
            if g.m == g.n * (g.n - 1) // 2:
                return kind
        elif is_isomorphic(g, tight_pattern(kind, delta)):
            return kind
    return None


def _check_family(family: Family, delta: int) -> None:
    if family is Family.EXTENDED_CLIQUES and delta != 4:
        raise ValueError("extended cliques exist only for delta=4")
    if family in (Family.NECKLACES, Family.DIAMONDS, Family.TRIANGLES) and delta != 3:
        raise ValueError(f"{family.value} scan is defined only for delta=3")


def find_structures(g: Graph, delta: int, family: Family | str) -> list[tuple[int, ...]]:
    """Vertex sets of the requested family, sorted by minimum vertex."""
    family = Family(family)
    _check_family(family, delta)
    adj = g.adj
    if family is Family.TIGHT_COMPONENTS:
        return [c for c, _ in tight_components(adj, delta)]
    if family is Family.EXTENDED_CLIQUES:
        return [p.vertices for p in disjoint_scan(adj, [TightKind.EXTENDED_CLIQUE], delta)]
    if family is Family.NECKLACES:
        return [p.vertices for p in disjoint_scan(adj, NECKLACE_KINDS, delta)]
    if family is Family.DIAMONDS:
        return diamonds(adj)
    if family is Family.TRIANGLES:
        return all_cliques(adj, 3)
    return all_cliques(adj, delta)


def tight_components(adj: Sequence[Sequence[int]], delta: int, alive=None,
                     skip_cliques: bool = False) -> list[tuple[tuple[int, ...], TightKind]]:
    """Connected components of size at most 4Δ that are Δ-tight."""
    sizes = {k.size(delta) for k in kinds_for(delta)}
    host = None
    out = []
    for comp in components_of(adj, alive):
        size = len(comp)
        if size not in sizes or size > 4 * delta:
            continue
        if size == delta and all(len(adj[v]) == delta - 1 for v in comp):
            # a connected (Δ-1)-regular graph on Δ vertices is K_Δ
            if not skip_cliques:
                out.append((comp, TightKind.CLIQUE))
            continue
        if host is None:
            host = Graph(adj)
        sub, _ = induced_subgraph(host, comp)
        kind = classify_tight(sub, delta)
        if kind is not None and not (skip_cliques and kind is TightKind.CLIQUE):
            out.append((comp, kind))
    return out


def disjoint_scan(adj: Sequence[Sequence[int]], kinds: Sequence[TightKind], delta: int) -> list[TightPiece]:
    """Greedy pairwise-disjoint occurrences, scanning seeds in ascending id.

    At each seed the occurrences whose minimum vertex is the seed are taken
    in lexicographic order, kind order breaking ties; the first one disjoint
    from everything already taken wins.
    """
    patterns = [(k, tight_pattern(k, delta)) for k in kinds]
    top = max(map(len, adj), default=0)
    patterns = [(k, p) for k, p in patterns if p.max_degree <= top]
    if not patterns:
        return []
    taken = bytearray(len(adj))
    out = []
    for s in range(len(adj)):
        if taken[s] or not adj[s]:
            continue
        cands = []
        for rank, (k, p) in enumerate(patterns):
            for occ in occurrences_with_min(adj, p, s):
                cands.append((occ, rank, k))
        for occ, _, k in sorted(cands):
            if not any(taken[v] for v in occ):
                for v in occ:
                    taken[v] = 1
                out.append(TightPiece(k, occ))
                break
    return out


def all_cliques(adj: Sequence[Sequence[int]], size: int) -> list[tuple[int, ...]]:
    out = []
    for s in range(len(adj)):
        if len(adj[s]) >= size - 1:
            out.extend(cliques_with_min(adj, s, size))
    return out


def diamonds(adj: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All induced K4-minus-an-edge vertex sets, sorted."""
    found = set()
    for h1, nb in enumerate(adj):
        if len(nb) < 3:
            continue
        s1 = set(nb)
        for h2 in nb:
            if h2 <= h1 or len(adj[h2]) < 3:
                continue
            common = sorted(s1.intersection(adj[h2]))
            for i, t1 in enumerate(common):
                for t2 in common[i + 1:]:
                    if t2 not in adj[t1]:
                        found.add(tuple(sorted((h1, h2, t1, t2))))
    return sorted(found)


def tight_occurrences(adj: Sequence[Sequence[int]], delta: int) -> list[tuple[TightKind, tuple[int, ...]]]:
    """Every Δ-tight induced subgraph of the host, as (kind, sorted vertices)."""
    out = [(TightKind.CLIQUE, c) for c in all_cliques(adj, delta)]
    for kind in kinds_for(delta):
        if kind is not TightKind.CLIQUE:
            out.extend((kind, occ) for occ in all_occurrences(adj, tight_pattern(kind, delta)))
    return out


def delta_free_vertices(g: Graph, delta: int) -> tuple[int, ...]:
    """Vertices lying in no Δ-tight induced subgraph."""
    return _free_vertices(g.adj, delta)


def _free_vertices(adj, delta):
    covered = bytearray(len(adj))
    for _, occ in tight_occurrences(adj, delta):
        for v in occ:
            covered[v] = 1
    return tuple(v for v in range(len(adj)) if not covered[v])


def free_diamonds_and_m(g: Graph, delta: int = 3) -> tuple[list[tuple[int, ...]], int, int]:
    """Free diamonds, the number of 3-free vertices and the number of free diamonds.

    A diamond is free when no induced necklace contains it.
    """
    if delta != 3:
        raise ValueError("free diamonds are defined only for delta=3")
    return _free_diamonds(g.adj)


def _free_diamonds(adj):
    in_necklace = set()
    for kind in NECKLACE_KINDS:
        for occ in all_occurrences(adj, tight_pattern(kind, 3)):
            in_necklace.add(frozenset(occ))
    free = [d for d in diamonds(adj)
            if not any(in_necklace_set.issuperset(d) for in_necklace_set in in_necklace)]
    m1 = len(_free_vertices(adj, 3))
    return free, m1, len(free)
