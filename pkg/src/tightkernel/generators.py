"""Seeded generators of valid instances (max degree and clique number ≤ Δ)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .catalog import TightKind, complete_graph, make_tight
from .graph import Graph, build_graph, disjoint_union
from .profitable import double_necklace_gadget, necklace_triangle_gadget

MAX_RETRIES = 100


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenSpec:
    delta: int
    counts: Mapping[TightKind, int] = field(default_factory=dict)
    extra_vertices: int = 0
    matching_edges: int = 0
    seed: int = 0


class _Builder:
    # Mutable edge set with the local validity test used by every generator.

    def __init__(self, n: int, delta: int, edges=()):
        self.delta = delta
        self.nbrs = [set() for _ in range(n)]
        for u, v in edges:
            self.nbrs[u].add(v)
            self.nbrs[v].add(u)

    def can_add(self, u: int, v: int) -> bool:
        nb = self.nbrs
        d = self.delta
        if u == v or v in nb[u] or len(nb[u]) >= d or len(nb[v]) >= d:
            return False
        # uv closes a (Δ+1)-clique only if N(u) ∩ N(v) holds a (Δ-1)-clique
        common = sorted(nb[u] & nb[v])
        if len(common) < d - 1:
            return True
        return not _has_clique(nb, common, d - 1)

    def add(self, u: int, v: int) -> None:
        self.nbrs[u].add(v)
        self.nbrs[v].add(u)

    def graph(self) -> Graph:
        return Graph([sorted(s) for s in self.nbrs])


def _has_clique(nb, cands, size):
    if size == 0:
        return True
    for i, u in enumerate(cands):
        rest = [w for w in cands[i + 1:] if w in nb[u]]
        if len(rest) >= size - 1 and _has_clique(nb, rest, size - 1):
            return True
    return False


def _ordered_counts(counts: Mapping[TightKind, int]):
    return [(k, counts[k]) for k in TightKind if counts.get(k, 0)]


def _add_matching(b: _Builder, count: int, rng: np.random.Generator) -> None:
    """Add ``count`` new edges, no two sharing an endpoint."""
    used: set[int] = set()
    for _ in range(count):
        for _ in range(MAX_RETRIES):
            free = [v for v in range(len(b.nbrs)) if v not in used and len(b.nbrs[v]) < b.delta]
            if len(free) < 2:
                raise GenerationError("not enough free vertices for the requested matching")
            u, v = (int(x) for x in rng.choice(free, size=2, replace=False))
            if b.can_add(u, v):
                b.add(u, v)
                used.update((u, v))
                break
        else:
            raise GenerationError(f"could not place a matching edge after {MAX_RETRIES} tries")


def gen_tight_union(spec: GenSpec) -> Graph:
    """Disjoint tight pieces, then isolated vertices, then a random matching.

    Pieces appear in catalog order; each kind's copies are consecutive.
    """
    pieces = []
    for kind, count in _ordered_counts(spec.counts):
        pieces.extend([make_tight(kind, spec.delta)] * count)
    base = disjoint_union(pieces + [Graph([()] * spec.extra_vertices)])
    if not spec.matching_edges:
        return base
    rng = np.random.default_rng(spec.seed)
    b = _Builder(base.n, spec.delta, base.edges())
    _add_matching(b, spec.matching_edges, rng)
    return b.graph()


def gen_random_bounded(n: int, delta: int, edge_attempts: int, seed: int = 0) -> Graph:
    """Random edges accepted only while max degree and clique number stay ≤ Δ."""
    if n < 2:
        return build_graph(max(n, 0), [])
    rng = np.random.default_rng(seed)
    b = _Builder(n, delta)
    pairs = rng.integers(0, n, size=(edge_attempts, 2))
    for u, v in pairs.tolist():
        if b.can_add(u, v):
            b.add(u, v)
    return b.graph()


def _near_clique(delta: int) -> Graph:
    g = complete_graph(delta + 1)
    return build_graph(delta + 1, [e for e in g.edges() if e != (0, 1)])


def gen_mixed(delta: int, n_target: int, seed: int = 0) -> Graph:
    """Tight pieces, nibble gadgets and loose vertices joined by random edges.

    Meant for fuzzing: the pieces give every decomposition step something to
    find and the random edges perturb them.  Vertex ids are shuffled.
    """
    rng = np.random.default_rng(seed)
    kinds = [k for k in TightKind if k.valid_for(delta)]
    gadgets = [double_necklace_gadget(), necklace_triangle_gadget()] if delta == 3 else [_near_clique(delta)]
    parts = []
    total = 0
    while total < n_target:
        r = rng.random()
        if r < 0.55:
            g = make_tight(kinds[int(rng.integers(len(kinds)))], delta)
        elif r < 0.7:
            g = gadgets[int(rng.integers(len(gadgets)))]
        else:
            g = Graph([()] * int(rng.integers(1, 4)))
        if total + g.n > n_target and parts:
            break
        parts.append(g)
        total += g.n
    base = disjoint_union(parts)
    perm = rng.permutation(base.n)
    edges = [(int(perm[u]), int(perm[v])) for u, v in base.edges()]
    b = _Builder(base.n, delta, edges)
    for u, v in rng.integers(0, max(base.n, 1), size=(int(rng.integers(0, base.n // 2 + 2)), 2)).tolist():
        if base.n > 1 and b.can_add(u, v):
            b.add(u, v)
    return b.graph()
