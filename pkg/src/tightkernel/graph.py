"""Immutable simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, unknown vertex)."""


class InvalidInstanceError(ValueError):
    """The graph violates max(Δ(G), ω(G)) ≤ Δ."""

    def __init__(self, violation: "Violation"):
        super().__init__(str(violation))
        self.violation = violation


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``adj[v]`` is the ascending tuple of neighbours of ``v``.  Instances are
    never mutated after construction.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, adj: Sequence[Sequence[int]]):
        # Trusted constructor: callers guarantee symmetry and sortedness.
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self.n: int = len(self.adj)
        self.m: int = sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def max_degree(self) -> int:
        return max(map(len, self.adj), default=0)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield u, v

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class InstanceParams:
    delta: int

    def __post_init__(self):
        if not isinstance(self.delta, int) or self.delta < 3:
            raise ValueError(f"delta must be an integer >= 3, got {self.delta!r}")


@dataclass(frozen=True)
class Violation:
    """Why a graph is not a valid instance for a given Δ.

    ``kind`` is ``"degree"`` (``vertices`` holds the offending vertex) or
    ``"clique"`` (``vertices`` holds a clique on Δ+1 vertices).
    """

    kind: str
    vertices: tuple[int, ...]
    delta: int

    def __str__(self) -> str:
        if self.kind == "degree":
            return f"vertex {self.vertices[0]} has degree greater than delta={self.delta}"
        return f"clique {list(self.vertices)} has delta+1={self.delta + 1} vertices"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges are collapsed.

    Raises GraphError on out-of-range endpoints or self-loops.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph([sorted(s) for s in nbrs])


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Disjoint union; the i-th graph's vertices follow those of earlier ones."""
    adj: list[tuple[int, ...]] = []
    for g in graphs:
        off = len(adj)
        adj.extend(tuple(u + off for u in a) for a in g.adj)
    return Graph(adj)


def find_violation(g: Graph, delta: int) -> Violation | None:
    """First violation of max(Δ(G), ω(G)) ≤ delta, or None.

    A clique on delta+1 vertices forces every member to have degree exactly
    delta with its closed neighbourhood equal to the clique, so only such
    neighbourhoods are inspected.
    """
    adj = g.adj
    for v, nb in enumerate(adj):
        if len(nb) > delta:
            return Violation("degree", (v,), delta)
    for v, nb in enumerate(adj):
        if len(nb) != delta or nb[0] < v:
            # the minimum vertex of a (delta+1)-clique reports it
            continue
        if all(b in adj[a] for i, a in enumerate(nb) for b in nb[i + 1:]):
            return Violation("clique", (v,) + nb, delta)
    return None


def validate_instance(g: Graph, params: InstanceParams | int) -> Violation | None:
    """Return None if ``g`` is a valid instance, else the violation found."""
    delta = params.delta if isinstance(params, InstanceParams) else InstanceParams(params).delta
    return find_violation(g, delta)


def check_instance(g: Graph, delta: int) -> None:
    """Raise InvalidInstanceError unless ``g`` is valid for ``delta``."""
    violation = validate_instance(g, delta)
    if violation is not None:
        raise InvalidInstanceError(violation)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``; new id ``i`` maps to ``mapping[i]``.

    New ids follow the ascending order of the original ids.
    """
    mapping = tuple(sorted(set(s)))
    if mapping and (mapping[0] < 0 or mapping[-1] >= g.n):
        bad = mapping[0] if mapping[0] < 0 else mapping[-1]
        raise GraphError(f"vertex {bad} is not in the graph")
    index = {v: i for i, v in enumerate(mapping)}
    adj = [tuple(index[u] for u in g.adj[v] if u in index) for v in mapping]
    return Graph(adj), mapping


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted tuples, ordered by their minimum vertex."""
    return components_of(g.adj)


def components_of(adj: Sequence[Sequence[int]], alive: Sequence[int] | None = None) -> list[tuple[int, ...]]:
    # Shared by graph-level callers and residual-graph passes in decompose.
    n = len(adj)
    seen = bytearray(n)
    out = []
    for s in range(n):
        if seen[s] or (alive is not None and not alive[s]):
            continue
        seen[s] = 1
        comp = [s]
        queue = deque((s,))
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = 1
                    comp.append(u)
                    queue.append(u)
        comp.sort()
        out.append(tuple(comp))
    return out


def is_clique(g_adj: Sequence[Sequence[int]], vs: Sequence[int]) -> bool:
    return all(b in g_adj[a] for i, a in enumerate(vs) for b in vs[i + 1:])


def is_independent(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    chosen = set(vs)
    if len(chosen) != len(vs):
        return False
    return not any(u in chosen for v in vs for u in g.adj[v])


def closed_neighborhood(adj: Sequence[Sequence[int]], vs: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for v in vs:
        out.add(v)
        out.update(adj[v])
    return out
