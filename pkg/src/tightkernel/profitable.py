"""Δ-profitable sets and the nibbling phase of the decomposition.

A set Z is Δ-profitable when G[Z] has an independent set S with
N[S] ⊆ Z and |Z| ≤ Δ|S| - 1: any independent set of G - Z grows by |S|
when S is added, a gain of more than |Z|/Δ.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .catalog import _diamond, diamonds
from .graph import Graph, build_graph, closed_neighborhood
from .matching import Pattern, occurrences_with_min


class NibbleError(RuntimeError):
    """A nibble produced by the search failed its profitability check."""


@dataclass(frozen=True)
class ProfitableSet:
    Z: tuple[int, ...]
    S: tuple[int, ...]


def nibble_bound(delta: int) -> int:
    return max(delta + 3, 10)


def check_profitable(g: Graph, Z: Iterable[int], delta: int) -> tuple[int, ...] | None:
    """A witness S certifying that Z is Δ-profitable in g, or None.

    S is a maximum independent set among the vertices whose closed
    neighbourhood lies inside Z (lexicographically first among maxima).
    Z may have at most max(Δ+3, 10) vertices.
    """
    return profitable_witness(g.adj, Z, delta)


def profitable_witness(adj: Sequence[Sequence[int]], Z: Iterable[int], delta: int) -> tuple[int, ...] | None:
    Z = sorted(set(Z))
    if len(Z) > nibble_bound(delta):
        raise ValueError(f"|Z|={len(Z)} exceeds the nibble bound {nibble_bound(delta)}")
    zset = set(Z)
    interior = [v for v in Z if zset.issuperset(adj[v])]
    # only sizes with Δ|S| - 1 >= |Z| matter
    need = -(-(len(Z) + 1) // delta)
    for size in range(len(interior), need - 1, -1):
        for cand in combinations(interior, size):
            if all(b not in adj[a] for i, a in enumerate(cand) for b in cand[i + 1:]):
                return cand
    return None


def double_necklace_gadget() -> Graph:
    # two diamonds whose tips hang off the shared edge 8-9
    return build_graph(10, _diamond(0, 1, 2, 3) + _diamond(4, 5, 6, 7)
                       + [(2, 8), (3, 9), (6, 8), (7, 9), (8, 9)])


def necklace_triangle_gadget() -> Graph:
    # diamond tips hang off edge 4-5, which also lies in triangle 4-5-6
    return build_graph(7, _diamond(0, 1, 2, 3) + [(2, 4), (3, 5), (4, 5), (4, 6), (5, 6)])


@lru_cache(maxsize=None)
def cubic_nibble_patterns() -> tuple[Pattern, Pattern]:
    return (Pattern(double_necklace_gadget(), "double_necklace"),
            Pattern(necklace_triangle_gadget(), "necklace_triangle"))


def nibble_targets_at(adj: Sequence[Sequence[int]], delta: int, s: int) -> list[tuple[int, ...]]:
    """Nibble patterns of the host whose minimum vertex is ``s``, lexicographically.

    Δ ≥ 4: induced K_{Δ+1} minus an edge.  Δ = 3: two diamond necklaces
    sharing their connecting edge, or a diamond necklace sharing that edge
    with a triangle.
    """
    if delta == 3:
        found = set()
        for p in cubic_nibble_patterns():
            found.update(occurrences_with_min(adj, p, s))
        return sorted(found)
    return _near_cliques_at(adj, delta, s)


def _near_cliques_at(adj, delta, s):
    nb = adj[s]
    if len(nb) < delta - 1:
        return []
    # the Δ-1 clique vertices of the pattern have degree exactly Δ
    if len(nb) != delta and sum(1 for u in nb if len(adj[u]) == delta) < delta - 1:
        return []
    found = set()
    if len(nb) == delta:
        # s in the clique part: N(s) has exactly one non-adjacent pair
        missing = [(a, b) for i, a in enumerate(nb) for b in nb[i + 1:] if b not in adj[a]]
        if len(missing) == 1 and nb[0] > s:
            found.add((s,) + nb)
    # s is an endpoint of the missing edge
    full = [u for u in nb if len(adj[u]) == delta and u > s]
    for core in combinations(full, delta - 1):
        if not all(b in adj[a] for i, a in enumerate(core) for b in core[i + 1:]):
            continue
        common = set(adj[core[0]]).intersection(*(adj[c] for c in core[1:]))
        for w in common:
            if w > s and w not in nb and w != s:
                found.add(tuple(sorted(core + (s, w))))
    return sorted(found)


def find_nibble_target(g: Graph, delta: int) -> tuple[int, ...] | None:
    """Lexicographically first nibble pattern Y of g, or None."""
    adj = g.adj
    if not _may_have_targets(adj, delta):
        return None
    for s in range(g.n):
        hits = nibble_targets_at(adj, delta, s)
        if hits:
            return hits[0]
    return None


def _may_have_targets(adj, delta):
    if delta == 3:
        return bool(diamonds(adj))
    return any(len(a) == delta for a in adj)


def nibble_phase(g: Graph, delta: int) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Repeatedly remove N_{G-C}[Y] for the first nibble pattern Y.

    Returns the union C and the nibbles in removal order.
    """
    adj = list(g.adj)
    nibbles, _ = run_nibbles(adj, delta)
    return tuple(sorted(v for z in nibbles for v in z)), nibbles


def run_nibbles(adj: list[tuple[int, ...]], delta: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Nibble ``adj`` in place (removed vertices get empty neighbour tuples).

    Removing vertices never creates a pattern, so a single ascending pass
    that exhausts each seed before moving on reaches the fixed point, in the
    same order as repeatedly taking the globally first pattern.
    Returns (nibbles, witnesses).
    """
    nibbles: list[tuple[int, ...]] = []
    witnesses: list[tuple[int, ...]] = []
    if not _may_have_targets(adj, delta):
        return nibbles, witnesses
    bound = nibble_bound(delta)
    removed = bytearray(len(adj))
    for s in range(len(adj)):
        while not removed[s]:
            hits = nibble_targets_at(adj, delta, s)
            if not hits:
                break
            Z = tuple(sorted(closed_neighborhood(adj, hits[0])))
            if len(Z) > bound or len(Z) > delta + 7:
                raise NibbleError(f"nibble {list(Z)} exceeds the size bound")
            S = profitable_witness(adj, Z, delta)
            if S is None:
                raise NibbleError(f"nibble {list(Z)} is not {delta}-profitable")
            remove_vertices(adj, Z)
            for v in Z:
                removed[v] = 1
            nibbles.append(Z)
            witnesses.append(S)
    return nibbles, witnesses


def remove_vertices(adj: list[tuple[int, ...]], vs: Iterable[int]) -> None:
    """Delete vertices from a residual adjacency list in place."""
    vs = set(vs)
    touched = set()
    for v in vs:
        touched.update(adj[v])
        adj[v] = ()
    for u in touched - vs:
        adj[u] = tuple(w for w in adj[u] if w not in vs)
