"""Exact maximum independent set, list colouring and certificate extension."""

from __future__ import annotations

import os
from collections import deque
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from .graph import Graph, components_of, induced_subgraph, is_independent

if TYPE_CHECKING:
    from .decompose import Decomposition

DEFAULT_EXACT_LIMIT = 60
EXACT_LIMIT_ENV = "TIGHTKERNEL_EXACT_LIMIT"


class ExactLimitError(RuntimeError):
    def __init__(self, n: int, limit: int):
        super().__init__(f"graph has {n} vertices, exact solver limit is {limit}")
        self.n = n
        self.limit = limit


class ListColoringError(RuntimeError):
    """No colouring respecting the lists was found for ``component``."""

    def __init__(self, component: tuple[int, ...]):
        super().__init__(f"no list colouring of component {list(component)}")
        self.component = component


def default_exact_limit() -> int:
    return int(os.environ.get(EXACT_LIMIT_ENV, DEFAULT_EXACT_LIMIT))


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _MISSolver:
    # Bitmask branch-and-bound: take vertices of degree <= 1, split into
    # components, branch on a max-degree vertex, prune the exclusion branch
    # with a greedy clique-cover bound.

    def __init__(self, g: Graph):
        self.nbr = [sum(1 << u for u in g.adj[v]) for v in range(g.n)]
        self.memo: dict[int, int] = {}

    def solve(self, p: int) -> int:
        if p in self.memo:
            return self.memo[p]
        key = p
        nbr = self.nbr
        taken = 0
        changed = True
        while changed and p:
            changed = False
            for v in _bits(p):
                d = (nbr[v] & p).bit_count()
                if d <= 1:
                    taken |= 1 << v
                    p &= ~((1 << v) | nbr[v])
                    changed = True
                    break
        if not p:
            self.memo[key] = taken
            return taken
        comp = self._component(p)
        if comp != p:
            res = taken
            rest = p
            while rest:
                c = self._component(rest)
                res |= self.solve(c)
                rest &= ~c
            self.memo[key] = res
            return res
        best_v, best_d = -1, -1
        for v in _bits(p):
            d = (nbr[v] & p).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        bit = 1 << best_v
        with_v = self.solve(p & ~(bit | nbr[best_v])) | bit
        rest = p & ~bit
        if self._clique_cover(rest) > with_v.bit_count():
            without = self.solve(rest)
            if without.bit_count() > with_v.bit_count():
                with_v = without
        res = taken | with_v
        self.memo[key] = res
        return res

    def _component(self, p: int) -> int:
        low = p & -p
        comp = low
        frontier = low
        nbr = self.nbr
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= nbr[v]
            nxt &= p & ~comp
            comp |= nxt
            frontier = nxt
        return comp

    def _clique_cover(self, p: int) -> int:
        cliques: list[int] = []
        nbr = self.nbr
        for v in _bits(p):
            for i, c in enumerate(cliques):
                if c & ~nbr[v] == 0:
                    cliques[i] = c | (1 << v)
                    break
            else:
                cliques.append(1 << v)
        return len(cliques)


def max_independent_set(g: Graph, limit: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Size and a maximum independent set of ``g``.

    Raises ExactLimitError when ``g.n`` exceeds ``limit`` (default 60, or the
    TIGHTKERNEL_EXACT_LIMIT environment variable).
    """
    limit = default_exact_limit() if limit is None else limit
    if g.n > limit:
        raise ExactLimitError(g.n, limit)
    mask = _MISSolver(g).solve((1 << g.n) - 1)
    witness = tuple(_bits(mask))
    return len(witness), witness


def independence_number(g: Graph, limit: int | None = None) -> int:
    return max_independent_set(g, limit)[0]


def list_color(g: Graph, lists: Mapping[int, Iterable[int]] | Sequence[Iterable[int]]) -> dict[int, int]:
    """Colour every vertex from its list so that adjacent vertices differ.

    Works component by component.  Components with a vertex whose list is
    longer than its degree are coloured greedily from the far end of a BFS
    tree rooted there, which cannot fail; otherwise backtracking with a
    smallest-list-first order is used.  Raises ListColoringError with the
    offending component if no colouring exists.
    """
    if isinstance(lists, Mapping):
        lst = [tuple(sorted(lists[v])) for v in range(g.n)]
    else:
        lst = [tuple(sorted(l)) for l in lists]
    colour: dict[int, int] = {}
    for comp in components_of(g.adj):
        slack = next((v for v in comp if len(lst[v]) > len(g.adj[v])), None)
        if slack is not None and _greedy_towards(g, lst, slack, colour):
            continue
        if not _backtrack(g, lst, comp, colour):
            raise ListColoringError(comp)
    return colour


def _greedy_towards(g, lst, root, colour):
    order = [root]
    seen = {root}
    queue = deque((root,))
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                order.append(u)
                queue.append(u)
    # every non-root vertex still has its BFS parent uncoloured when its turn comes
    for v in reversed(order):
        used = {colour[u] for u in g.adj[v] if u in colour}
        free = [c for c in lst[v] if c not in used]
        if not free:
            for u in order:
                colour.pop(u, None)
            return False
        colour[v] = free[0]
    return True


def _backtrack(g, lst, comp, colour):
    todo = set(comp)

    def pick():
        best, key = None, None
        for v in todo:
            used = {colour[u] for u in g.adj[v] if u in colour}
            k = (sum(1 for c in lst[v] if c not in used), -len(g.adj[v]), v)
            if key is None or k < key:
                best, key = v, k
        return best

    # explicit stack of (vertex, untried colours) so deep components cannot
    # hit the recursion limit
    stack: list[tuple[int, list[int]]] = []
    while todo:
        v = pick()
        todo.discard(v)
        used = {colour[u] for u in g.adj[v] if u in colour}
        stack.append((v, [c for c in lst[v] if c not in used]))
        while True:
            if not stack:
                return False
            v, options = stack[-1]
            colour.pop(v, None)
            if options:
                colour[v] = options.pop(0)
                break
            stack.pop()
            todo.add(v)
    return True


def residual_lists(g: Graph, delta: int, dec: "Decomposition") -> dict[int, tuple[int, ...]]:
    """Colour lists for A: all Δ colours, minus colour 1 next to B ∪ C ∪ D."""
    outside = set(dec.B) | set(dec.C) | set(dec.D)
    full = tuple(range(1, delta + 1))
    out = {}
    for v in dec.A:
        out[v] = full[1:] if any(u in outside for u in g.adj[v]) else full
    return out


def extend_solution(g: Graph, delta: int, dec: "Decomposition", s_residual: Iterable[int]) -> tuple[int, ...]:
    """Extend an independent set of G[B ∪ C ∪ D] by |A|/Δ vertices of A.

    The added vertices form colour class 1 of a list colouring of G[A] in
    which vertices with a neighbour in B ∪ C ∪ D may not use colour 1.
    """
    s_residual = tuple(sorted(set(s_residual)))
    residual = set(dec.B) | set(dec.C) | set(dec.D)
    if any(v not in residual for v in s_residual) or not is_independent(g, s_residual):
        raise ValueError("s_residual must be an independent set of G[B ∪ C ∪ D]")
    sub, mapping = induced_subgraph(g, dec.A)
    lists_by_old = residual_lists(g, delta, dec)
    colouring = list_color(sub, [lists_by_old[old] for old in mapping])
    class_one = [mapping[i] for i, c in colouring.items() if c == 1]
    if len(class_one) * delta != len(dec.A):
        raise ListColoringError(tuple(dec.A))
    return tuple(sorted(set(s_residual).union(class_one)))
