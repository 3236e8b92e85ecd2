"""Independent checkers for decompositions, kernels and the free-vertex bounds.

The checkers avoid the decomposition's own search code: tight pieces are
re-recognised with networkx isomorphism, profitability is re-derived by
enumerating every subset of the nibble, and freeness is recomputed on G - C.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import networkx as nx

from .catalog import TightKind, delta_free_vertices, free_diamonds_and_m, make_tight
from .decompose import Decomposition
from .exact import ExactLimitError, default_exact_limit, max_independent_set
from .graph import Graph, induced_subgraph
from .kernel import Branch, KernelResult, meets_bound, parse_rational, scale
from .profitable import nibble_bound

SET_NAMES = ("A0", "A1", "A2", "A3", "B", "C", "D")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: dict[str, Any] | None = None
    skipped: bool = False

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed, "skipped": self.skipped,
                               "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = _jsonable(self.counterexample)
        return out


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


@dataclass(frozen=True)
class FreeBoundResult:
    passed: bool
    alpha: int
    n: int
    m: int
    bound: Fraction


def _jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items) if isinstance(x, (set, frozenset)) else items
    return x


def _ok(name, detail=""):
    return CheckResult(name, True, detail)


def _fail(name, detail, **payload):
    return CheckResult(name, False, detail, payload)


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _sub_nx(g: Graph, vs) -> nx.Graph:
    return nx.Graph(_nx(g).subgraph(vs))


def _is_clique(g: Graph, vs) -> bool:
    vs = list(vs)
    return all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def verify_decomposition(g: Graph, delta: int, dec: Decomposition, use_exact: bool = True,
                         limit: int | None = None) -> VerificationReport:
    """Check the partition and the five guarantees; failures become report entries."""
    limit = default_exact_limit() if limit is None else limit
    checks = [_check_partition(g, dec)]
    if not checks[0].passed:
        return VerificationReport(tuple(checks))
    checks.append(_check_tight(g, delta, dec))
    checks.append(_check_cliques(g, delta, dec))
    checks.append(_check_nibbles(g, delta, dec))
    checks.append(_check_free(g, delta, dec))
    checks.append(_check_alpha(g, delta, dec, use_exact, limit))
    return VerificationReport(tuple(checks))


def _check_partition(g, dec):
    seen: dict[int, str] = {}
    for name, vs in dec.sets().items():
        for v in vs:
            if not 0 <= v < g.n:
                return _fail("partition", f"vertex {v} of {name} is not in the graph", vertex=v, set=name)
            if v in seen:
                return _fail("partition", f"vertex {v} is in both {seen[v]} and {name}",
                             vertex=v, sets=[seen[v], name])
            seen[v] = name
    missing = [v for v in range(g.n) if v not in seen]
    if missing:
        return _fail("partition", f"{len(missing)} vertices are in no set", vertices=missing)
    return _ok("partition")


def _check_tight(g, delta, dec):
    name = "tight_partition"
    a = set(dec.A)
    a3 = set(dec.A3)
    pieces = [(p.kind, tuple(p.vertices)) for p in dec.tight_pieces]
    pieces += [(TightKind.CLIQUE, tuple(q)) for q in dec.clique_parts if a3.intersection(q)]
    covered: set[int] = set()
    for idx, (kind, vs) in enumerate(pieces):
        if not a.issuperset(vs):
            return _fail(name, f"piece {idx} leaves A", piece=idx, vertices=vs,
                         outside=[v for v in vs if v not in a])
        if covered.intersection(vs):
            return _fail(name, f"piece {idx} overlaps an earlier piece", piece=idx, vertices=vs)
        covered.update(vs)
        if not kind.valid_for(delta):
            return _fail(name, f"piece {idx} has kind {kind.value}, not {delta}-tight", piece=idx, vertices=vs)
        if not nx.is_isomorphic(_sub_nx(g, vs), _nx(make_tight(kind, delta))):
            return _fail(name, f"piece {idx} does not induce a {kind.value}", piece=idx, vertices=vs)
    if covered != a:
        return _fail(name, "pieces do not cover A", uncovered=sorted(a - covered))
    if len(a) % delta:
        return _fail(name, f"|A| = {len(a)} is not a multiple of {delta}", size=len(a))
    return _ok(name, f"{len(pieces)} pieces")


def _check_cliques(g, delta, dec):
    name = "clique_partition"
    b = set(dec.B)
    covered: set[int] = set()
    for idx, q in enumerate(dec.clique_parts):
        if not b.intersection(q):
            continue
        if not b.issuperset(q):
            return _fail(name, f"clique part {idx} straddles B", part=idx, vertices=q)
        if len(q) != delta or not _is_clique(g, q):
            return _fail(name, f"part {idx} is not a {delta}-clique", part=idx, vertices=q)
        if covered.intersection(q):
            return _fail(name, f"part {idx} overlaps another part", part=idx, vertices=q)
        covered.update(q)
    if covered != b:
        return _fail(name, "clique parts do not cover B", uncovered=sorted(b - covered))
    cd = len(dec.C) + len(dec.D)
    if len(b) > 3 * delta * cd:
        return _fail(name, f"|B| = {len(b)} exceeds 3Δ(|C|+|D|) = {3 * delta * cd}",
                     B=len(b), bound=3 * delta * cd)
    return _ok(name)


def _profitable_bruteforce(g, removed, Z, delta):
    # every subset of Z, as bitmasks over positions in Z
    zs = sorted(Z)
    zset = set(zs)
    pos = {v: i for i, v in enumerate(zs)}
    interior = 0
    nbr = [0] * len(zs)
    for i, v in enumerate(zs):
        live = [u for u in g.adj[v] if u not in removed]
        if zset.issuperset(live):
            interior |= 1 << i
        for u in live:
            if u in pos:
                nbr[i] |= 1 << pos[u]
    for mask in range(1, 1 << len(zs)):
        if mask & ~interior:
            continue
        size = mask.bit_count()
        if len(zs) > delta * size - 1:
            continue
        if all(not (nbr[i] & mask) for i in range(len(zs)) if mask >> i & 1):
            return [zs[i] for i in range(len(zs)) if mask >> i & 1]
    return None


def _check_nibbles(g, delta, dec):
    name = "nibbles"
    removed: set[int] = set()
    cap = min(nibble_bound(delta), delta + 7)
    for idx, z in enumerate(dec.nibbles):
        if len(z) > cap:
            return _fail(name, f"nibble {idx} has {len(z)} > {cap} vertices", nibble=idx, vertices=z)
        if _profitable_bruteforce(g, removed, z, delta) is None:
            return _fail(name, f"nibble {idx} is not {delta}-profitable after removing earlier nibbles",
                         nibble=idx, vertices=z)
        removed.update(z)
    return _ok(name, f"{len(dec.nibbles)} nibbles")


def _check_free(g, delta, dec):
    name = "free"
    h, mapping = induced_subgraph(g, [v for v in range(g.n) if v not in set(dec.C)])
    free = {mapping[v] for v in delta_free_vertices(h, delta)}
    d = set(dec.D)
    if delta >= 4:
        bad = sorted(d - free)
        if bad:
            return _fail(name, f"vertex {bad[0]} of D is not {delta}-free in G - C", vertices=bad)
        return _ok(name)
    fdiamonds, _, _ = free_diamonds_and_m(h, 3)
    fdiamonds = [tuple(mapping[v] for v in dm) for dm in fdiamonds]
    need = d - free
    parts = [dm for dm in fdiamonds if d.issuperset(dm) and need.intersection(dm)]
    covered = set()
    for dm in parts:
        if covered.intersection(dm):
            return _fail(name, "free diamonds inside D overlap", diamond=dm)
        covered.update(dm)
    bad = sorted(need - covered)
    if bad:
        return _fail(name, f"vertex {bad[0]} of D is neither 3-free nor in a free diamond inside D",
                     vertices=bad)
    return _ok(name, f"{len(parts)} free diamonds")


def _check_alpha(g, delta, dec, use_exact, limit):
    name = "alpha"
    if not use_exact or g.n > limit:
        return CheckResult(name, True, f"skipped (n = {g.n}, limit = {limit})", skipped=True)
    alpha, _ = max_independent_set(g, limit)
    res, _ = induced_subgraph(g, dec.residual)
    alpha_r, _ = max_independent_set(res, limit)
    gain = Fraction(len(dec.A), delta)
    if alpha != alpha_r + gain:
        return _fail(name, f"α(G) = {alpha} but α(G[B∪C∪D]) + |A|/Δ = {alpha_r + gain}",
                     alpha=alpha, alpha_residual=alpha_r, A=len(dec.A))
    return _ok(name, f"{alpha} = {alpha_r} + {len(dec.A)}/{delta}")


def check_free_bound(g: Graph, delta: int, limit: int | None = None) -> FreeBoundResult:
    """α ≥ n/Δ + m/(34Δ²) (Δ ≥ 4, m free vertices) or α ≥ n/3 + m(G)/42 (Δ = 3).

    Raises ExactLimitError when g is too large for the exact solver.
    """
    alpha, _ = max_independent_set(g, limit)
    if delta == 3:
        _, m1, m2 = free_diamonds_and_m(g, 3)
        m = m1 + m2
        bound = Fraction(g.n, 3) + Fraction(m, 42)
    else:
        m = len(delta_free_vertices(g, delta))
        bound = Fraction(g.n, delta) + Fraction(m, scale(delta))
    return FreeBoundResult(alpha >= bound, alpha, g.n, m, bound)


def verify_kernel(g: Graph, kr: KernelResult, delta: int, k, limit: int | None = None) -> VerificationReport:
    """Compare α(G) ≥ n/Δ + k with α(G0) ≥ n0/Δ + k and check the size bounds.

    Raises ExactLimitError when either graph is too large.
    """
    k = parse_rational(k)
    checks = []
    expect, _ = induced_subgraph(g, kr.mapping)
    if expect != kr.g0 or kr.n0 != kr.g0.n:
        checks.append(_fail("induced", "g0 is not the induced subgraph on its mapping", mapping=kr.mapping))
    else:
        checks.append(_ok("induced"))
    if kr.branch is Branch.NIBBLE:
        cap = scale(delta) * math.ceil(k)
        ok = kr.n0 <= cap and kr.guaranteed_yes
        detail = f"n0 = {kr.n0} ≤ 34Δ²⌈k⌉ = {cap}"
    else:
        cap = 114 * delta ** 3 * k
        ok = k == 0 or kr.n0 < cap
        detail = f"n0 = {kr.n0} < 114Δ³k = {cap}"
    checks.append(CheckResult("size_bound", ok, detail, None if ok else {"n0": kr.n0, "bound": cap}))
    alpha, _ = max_independent_set(g, limit)
    alpha0, _ = max_independent_set(kr.g0, limit)
    lhs = meets_bound(alpha, g.n, delta, k)
    rhs = meets_bound(alpha0, kr.n0, delta, k)
    ok = lhs == rhs and (rhs or not kr.guaranteed_yes)
    checks.append(CheckResult("equivalence", ok, f"G: {lhs}, G0: {rhs}",
                              None if ok else {"alpha": alpha, "alpha0": alpha0, "n": g.n, "n0": kr.n0, "k": k}))
    return VerificationReport(tuple(checks))


__all__ = ["CheckResult", "VerificationReport", "FreeBoundResult", "verify_decomposition",
           "check_free_bound", "verify_kernel", "ExactLimitError", "SET_NAMES"]
