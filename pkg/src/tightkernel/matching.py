"""Anchored induced-subgraph matching for small fixed patterns.

Host graphs are given as adjacency sequences (``adj[v]`` = neighbours of
``v``); removed vertices simply have an empty neighbour tuple, which lets the
decomposition passes run on a residual graph without rebuilding it.

Every pattern used here is connected and has at most twelve vertices, so an
embedding anchored at a host vertex is found by extending along a BFS order of
the pattern, each new vertex chosen among the (at most Δ) host neighbours of
an already-mapped vertex.  Work per anchor is bounded by a function of Δ and
the pattern alone.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Sequence

from .graph import Graph


class Pattern:
    """Preprocessed pattern graph with one search plan per anchor vertex."""

    def __init__(self, graph: Graph, name: str = ""):
        self.graph = graph
        self.name = name
        self.n = graph.n
        self.adj = tuple(frozenset(a) for a in graph.adj)
        self.degrees = tuple(len(a) for a in graph.adj)
        self.max_degree = max(self.degrees, default=0)
        self._plans: dict[int, tuple] = {}
        self._anchors: tuple[int, ...] | None = None

    def plan(self, anchor: int) -> tuple:
        """(order, parent, adjacent-earlier, non-adjacent-earlier) for an anchor."""
        if anchor in self._plans:
            return self._plans[anchor]
        order = [anchor]
        parent = {anchor: -1}
        queue = deque((anchor,))
        while queue:
            v = queue.popleft()
            # high-degree vertices first: they have the fewest host candidates
            for u in sorted(self.adj[v], key=lambda x: (-self.degrees[x], x)):
                if u not in parent:
                    parent[u] = v
                    order.append(u)
                    queue.append(u)
        if len(order) != self.n:
            raise ValueError(f"pattern {self.name!r} is not connected")
        pos = {v: i for i, v in enumerate(order)}
        steps = []
        for i, q in enumerate(order[1:], start=1):
            earlier = order[:i]
            adj_e = tuple(r for r in earlier if r in self.adj[q] and r != parent[q])
            non_e = tuple(r for r in earlier if r not in self.adj[q])
            steps.append((q, parent[q], self.degrees[q], adj_e, non_e))
        plan = (anchor, tuple(steps), pos)
        self._plans[anchor] = plan
        return plan

    def anchors(self) -> tuple[int, ...]:
        """One representative per automorphism orbit of the pattern."""
        if self._anchors is None:
            orbit_of: dict[int, int] = {}
            padj = [tuple(sorted(a)) for a in self.adj]
            for p in range(self.n):
                if p in orbit_of:
                    continue
                orbit_of[p] = p
                for q in range(self.n):
                    if q not in orbit_of and self.degrees[q] == self.degrees[p]:
                        if next(embeddings(padj, self, p, q), None) is not None:
                            orbit_of[q] = p
            self._anchors = tuple(sorted(set(orbit_of.values())))
        return self._anchors


def embeddings(adj: Sequence[Sequence[int]], pattern: Pattern, anchor: int, host: int,
               lo: int = 0) -> Iterator[tuple[int, ...]]:
    """Induced embeddings of ``pattern`` sending ``anchor`` to ``host``.

    Only host vertices ``>= lo`` are used.  Yields the image tuple indexed by
    pattern vertex.
    """
    if host < lo or len(adj[host]) < pattern.degrees[anchor]:
        return
    _, steps, _ = pattern.plan(anchor)
    img = [-1] * pattern.n
    img[anchor] = host
    used = {host}
    yield from _extend(adj, steps, 0, img, used, lo)


def _extend(adj, steps, i, img, used, lo):
    if i == len(steps):
        yield tuple(img)
        return
    q, par, dq, adj_e, non_e = steps[i]
    for h in adj[img[par]]:
        if h < lo or h in used:
            continue
        nb = adj[h]
        if len(nb) < dq:
            continue
        if any(img[r] not in nb for r in adj_e):
            continue
        if any(img[r] in nb for r in non_e):
            continue
        img[q] = h
        used.add(h)
        yield from _extend(adj, steps, i + 1, img, used, lo)
        used.discard(h)
    img[q] = -1


def occurrences_with_min(adj: Sequence[Sequence[int]], pattern: Pattern,
                         seed: int) -> list[tuple[int, ...]]:
    """All induced occurrences whose minimum vertex is ``seed``.

    Returned as sorted vertex tuples, deduplicated, in lexicographic order.
    """
    found = set()
    for a in pattern.anchors():
        for img in embeddings(adj, pattern, a, seed, lo=seed):
            found.add(tuple(sorted(img)))
    return sorted(found)


def all_occurrences(adj: Sequence[Sequence[int]], pattern: Pattern) -> list[tuple[int, ...]]:
    """Every induced occurrence (as a sorted vertex tuple), lexicographically."""
    if not any(len(a) >= pattern.max_degree for a in adj):
        return []
    out = []
    for s in range(len(adj)):
        if adj[s]:
            out.extend(occurrences_with_min(adj, pattern, s))
    return out


def is_isomorphic(g: Graph, pattern: Pattern) -> bool:
    """Whether ``g`` is isomorphic to the pattern graph."""
    if g.n != pattern.n or g.m != pattern.graph.m:
        return False
    if sorted(map(len, g.adj)) != sorted(pattern.degrees):
        return False
    if g.n == 0:
        return True
    a = pattern.anchors()[0]
    return any(next(embeddings(g.adj, pattern, a, h), None) is not None for h in range(g.n))


def cliques_with_min(adj: Sequence[Sequence[int]], s: int, size: int) -> list[tuple[int, ...]]:
    """All cliques on ``size`` vertices whose minimum vertex is ``s``."""
    higher = [u for u in adj[s] if u > s]
    if len(higher) < size - 1:
        return []
    out: list[tuple[int, ...]] = []

    def grow(clique, cands):
        if len(clique) == size:
            out.append(tuple(clique))
            return
        need = size - len(clique)
        for i, u in enumerate(cands):
            if len(cands) - i < need:
                break
            nb = adj[u]
            grow(clique + [u], [w for w in cands[i + 1:] if w in nb])

    grow([s], higher)
    return out
