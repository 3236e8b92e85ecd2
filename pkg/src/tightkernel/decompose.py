"""Partition of a bounded-degree graph into A, B, C and D.

* A = A0 ∪ A1 ∪ A2 ∪ A3 induces a Δ-tightly partitioned graph;
* B is covered by disjoint Δ-cliques and |B| ≤ 3Δ(|C| + |D|);
* C is a sequence of small Δ-profitable nibbles;
* D is Δ-free in G - C;

so that α(G) = α(G[B ∪ C ∪ D]) + |A|/Δ.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import NECKLACE_KINDS, TightKind, TightPiece, all_cliques, diamonds, disjoint_scan, tight_components
from .graph import Graph, InstanceParams, check_instance
from .profitable import remove_vertices, run_nibbles


class DecompositionError(RuntimeError):
    """An internal invariant of the decomposition failed."""


@dataclass(frozen=True)
class Decomposition:
    delta: int
    n: int
    A0: tuple[int, ...] = ()
    A1: tuple[int, ...] = ()
    A2: tuple[int, ...] = ()
    A3: tuple[int, ...] = ()
    B: tuple[int, ...] = ()
    D: tuple[int, ...] = ()
    nibbles: tuple[tuple[int, ...], ...] = ()
    tight_pieces: tuple[TightPiece, ...] = ()
    clique_parts: tuple[tuple[int, ...], ...] = ()
    nibble_witnesses: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    @property
    def C(self) -> tuple[int, ...]:
        return tuple(sorted(v for z in self.nibbles for v in z))

    @property
    def A(self) -> tuple[int, ...]:
        return tuple(sorted(self.A0 + self.A1 + self.A2 + self.A3))

    @property
    def residual(self) -> tuple[int, ...]:
        """B ∪ C ∪ D, the part whose independence number matters."""
        return tuple(sorted(self.B + self.C + self.D))

    def sets(self) -> dict[str, tuple[int, ...]]:
        return {"A0": self.A0, "A1": self.A1, "A2": self.A2, "A3": self.A3,
                "B": self.B, "C": self.C, "D": self.D}


def decompose(g: Graph, delta: int) -> Decomposition:
    """Decompose a valid instance (max degree and clique number at most Δ)."""
    delta = InstanceParams(delta).delta
    check_instance(g, delta)
    n = g.n
    adj = list(g.adj)

    nibbles, witnesses = run_nibbles(adj, delta)
    alive = bytearray(b"\x01") * n
    for z in nibbles:
        for v in z:
            alive[v] = 0

    pieces: list[TightPiece] = []
    A0: list[int] = []
    if delta <= 5:
        # isolated Δ-cliques are left to the clique partition below
        for comp, kind in tight_components(adj, delta, alive=alive, skip_cliques=True):
            pieces.append(TightPiece(kind, comp))
            A0.extend(comp)
        _drop(adj, alive, A0)

    A1: list[int] = []
    if delta == 4:
        for piece in disjoint_scan(adj, [TightKind.EXTENDED_CLIQUE], 4):
            pieces.append(piece)
            A1.extend(piece.vertices)
        _drop(adj, alive, A1)

    A2: list[int] = []
    if delta == 3:
        for piece in disjoint_scan(adj, NECKLACE_KINDS, 3):
            pieces.append(piece)
            A2.extend(piece.vertices)
        _drop(adj, alive, A2)

    cliques = all_cliques(adj, delta)
    in_clique = bytearray(n)
    for q in cliques:
        for v in q:
            in_clique[v] = 1
    in_diamond = bytearray(n)
    if delta == 3:
        for dm in diamonds(adj):
            for v in dm:
                in_diamond[v] = 1
    D = [v for v in range(n) if alive[v] and (not in_clique[v] or in_diamond[v])]
    is_d = bytearray(n)
    for v in D:
        is_d[v] = 1

    parts = [q for q in cliques if not any(is_d[v] for v in q)]
    part_of = [-1] * n
    for i, q in enumerate(parts):
        for v in q:
            if part_of[v] != -1:
                raise DecompositionError(f"vertex {v} lies in two {delta}-cliques of A3'")
            part_of[v] = i
    for v in range(n):
        if alive[v] and not is_d[v] and part_of[v] == -1:
            raise DecompositionError(f"vertex {v} of A3' is in no {delta}-clique")

    outside = bytearray(is_d)
    for z in nibbles:
        for v in z:
            outside[v] = 1
    moved = _migrate(g.adj, delta, parts, part_of, outside)
    A3 = [v for i, q in enumerate(parts) if not moved[i] for v in q]
    B = [v for i, q in enumerate(parts) if moved[i] for v in q]

    return Decomposition(
        delta=delta,
        n=n,
        A0=tuple(sorted(A0)),
        A1=tuple(sorted(A1)),
        A2=tuple(sorted(A2)),
        A3=tuple(sorted(A3)),
        B=tuple(sorted(B)),
        D=tuple(D),
        nibbles=tuple(nibbles),
        tight_pieces=tuple(sorted(pieces, key=lambda p: p.vertices)),
        clique_parts=tuple(parts),
        nibble_witnesses=tuple(witnesses),
    )


def _drop(adj, alive, vs):
    if vs:
        remove_vertices(adj, vs)
        for v in vs:
            alive[v] = 0


def _migrate(adj, delta, parts, part_of, outside):
    """Move Δ-cliques with at least Δ-1 vertices seeing B ∪ C ∪ D into B.

    The moved set is the least fixed point of a monotone rule, so the result
    does not depend on processing order.  ``outside`` marks C ∪ D and is
    extended in place with B.
    """
    n = len(adj)
    moved = [False] * len(parts)
    sees = bytearray(n)
    count = [0] * len(parts)
    for i, q in enumerate(parts):
        for v in q:
            if any(outside[u] for u in adj[v]):
                sees[v] = 1
                count[i] += 1
    queue = [i for i, c in enumerate(count) if c >= delta - 1]
    while queue:
        i = queue.pop()
        if moved[i]:
            continue
        moved[i] = True
        for v in parts[i]:
            outside[v] = 1
        for v in parts[i]:
            for u in adj[v]:
                j = part_of[u]
                if j != -1 and not moved[j] and not sees[u]:
                    sees[u] = 1
                    count[j] += 1
                    if count[j] == delta - 1:
                        queue.append(j)
    return moved
