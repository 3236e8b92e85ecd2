"""DIMACS edge format and the versioned JSON result records.

Graph files use ``p edge <n> <m>`` and 1-based ``e <u> <v>`` lines; ``c``
lines and blank lines are comments.  Library ids are 0-based and the offset
lives only here.  Rationals in JSON are always "p/q" strings.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, TextIO

from .decompose import Decomposition
from .graph import Graph, GraphError, Violation, build_graph
from .kernel import Decision, Excess, KernelResult

SCHEMA = 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def parse_dimacs(text: str) -> Graph:
    n = declared = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            n, declared = _ints(parts[2:], lineno)
            if n < 0 or declared < 0:
                raise ParseError("negative count in problem line", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge before the problem line", lineno)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            u, v = _ints(parts[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' line")
    if len(edges) != declared:
        raise ParseError(f"problem line declares {declared} edges, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def read_dimacs(source: str | Path | TextIO) -> Graph:
    if hasattr(source, "read"):
        return parse_dimacs(source.read())
    return parse_dimacs(Path(source).read_text())


def format_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    """Canonical text: comments, problem line, edges sorted with u < v."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_dimacs(g: Graph, dest: str | Path | TextIO, comments: Iterable[str] = ()) -> None:
    text = format_dimacs(g, comments)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)


def rational(x: int | Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _record(kind: str, **fields: Any) -> dict[str, Any]:
    return {"schema": SCHEMA, "kind": kind, **fields}


def graph_json(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges()]}


def decomposition_json(dec: Decomposition) -> dict[str, Any]:
    sets = {name: sorted(vs) for name, vs in dec.sets().items()}
    return _record(
        "decomposition",
        delta=dec.delta,
        n=dec.n,
        sets=sets,
        nibbles=[sorted(z) for z in dec.nibbles],
        nibble_witnesses=[sorted(s) for s in dec.nibble_witnesses],
        tight_pieces=[{"kind": p.kind.value, "vertices": sorted(p.vertices)} for p in dec.tight_pieces],
        clique_parts=[sorted(q) for q in dec.clique_parts],
    )


def excess_json(ex: Excess, n: int, delta: int) -> dict[str, Any]:
    return _record("excess", n=n, delta=delta, k_lower=rational(ex.k_lower), k_upper=rational(ex.k_upper),
                   lower_bound=rational(Fraction(n, delta) + ex.k_lower),
                   upper_bound=rational(Fraction(n, delta) + ex.k_upper))


def kernel_json(kr: KernelResult) -> dict[str, Any]:
    return _record("kernel", delta=kr.delta, k=rational(kr.k), branch=kr.branch.value,
                   guaranteed_yes=kr.guaranteed_yes, n0=kr.n0, mapping=list(kr.mapping),
                   g0=graph_json(kr.g0))


def decision_json(d: Decision) -> dict[str, Any]:
    kr = d.kernel
    return _record("decision", delta=kr.delta, k=rational(kr.k), answer="yes" if d.answer else "no",
                   certificate=None if d.certificate is None else sorted(d.certificate),
                   branch=kr.branch.value, guaranteed_yes=kr.guaranteed_yes, n0=kr.n0)


def solution_json(alpha: int, witness: Iterable[int], n: int, delta: int) -> dict[str, Any]:
    return _record("solution", n=n, delta=delta, alpha=alpha, witness=sorted(witness),
                   excess=rational(alpha - Fraction(n, delta)))


def violation_json(v: Violation) -> dict[str, Any]:
    return _record("violation", violation=v.kind, vertices=sorted(v.vertices), delta=v.delta, message=str(v))


def error_json(message: str, **fields: Any) -> dict[str, Any]:
    return _record("error", message=message, **fields)
