"""Excess approximation and the linear kernel for α(G) ≥ n/Δ + k.

All bound arithmetic uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .decompose import Decomposition, decompose
from .exact import ExactLimitError, default_exact_limit, extend_solution, max_independent_set
from .graph import Graph, induced_subgraph

Rational = Union[int, Fraction]


class Branch(enum.Enum):
    NIBBLE = "nibble"
    RESIDUAL = "residual"


@dataclass(frozen=True)
class Excess:
    """α(G) - n/Δ lies in [k_lower, k_upper]; k_upper = 34Δ² · k_lower."""

    k_lower: Fraction
    k_upper: Fraction


@dataclass(frozen=True)
class KernelResult:
    g0: Graph
    mapping: tuple[int, ...]
    n0: int
    branch: Branch
    guaranteed_yes: bool
    k: Fraction
    delta: int


@dataclass(frozen=True)
class Decision:
    answer: bool
    certificate: tuple[int, ...] | None
    kernel: KernelResult


def parse_rational(value: Rational | str) -> Fraction:
    """Fraction from an int, Fraction or a "p/q" / integer string."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted for k; pass an int, Fraction or 'p/q'")
    return Fraction(value)


def scale(delta: int) -> int:
    return 34 * delta * delta


def approximate_excess(dec: Decomposition, n: int, delta: int) -> Excess:
    """Interval for α(G) - n/Δ from the sizes of C and D."""
    cd = len(dec.C) + len(dec.D)
    return Excess(Fraction(cd, scale(delta)), Fraction(cd))


def kernelize(g: Graph, dec: Decomposition, delta: int, k: Rational | str) -> KernelResult:
    """Induced subgraph G0 with α(G) ≥ n/Δ + k  ⟺  α(G0) ≥ n0/Δ + k.

    If |C| + |D| ≥ 34Δ²k the answer is yes and G0 is a small witness: the
    first ⌈Δk⌉ nibbles when there are at least Δk of them, otherwise C plus
    the ⌈34Δ²k⌉ - |C| lowest-id vertices of D.  Otherwise G0 = G[B ∪ C ∪ D].
    """
    k = parse_rational(k)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    C, D = dec.C, dec.D
    threshold = scale(delta) * k
    if len(C) + len(D) >= threshold:
        r = len(dec.nibbles)
        if r >= delta * k:
            keep = [v for z in dec.nibbles[:math.ceil(delta * k)] for v in z]
        else:
            keep = list(C) + list(D[:math.ceil(threshold) - len(C)])
        branch, yes = Branch.NIBBLE, True
    else:
        keep = dec.residual
        branch, yes = Branch.RESIDUAL, False
    g0, mapping = induced_subgraph(g, keep)
    return KernelResult(g0, mapping, g0.n, branch, yes, k, delta)


def meets_bound(alpha: int, n: int, delta: int, k: Fraction) -> bool:
    return alpha >= Fraction(n, delta) + k


def decide_atlb(g: Graph, delta: int, k: Rational | str, limit: int | None = None,
                dec: Decomposition | None = None) -> Decision:
    """Decide α(G) ≥ n/Δ + k through the kernel.

    Only the kernel (or, for a certificate, G[B ∪ C ∪ D]) goes through the
    exact solver.  Raises ExactLimitError when a needed exact stage is over
    ``limit``; a guaranteed yes still returns, with no certificate.
    """
    k = parse_rational(k)
    limit = default_exact_limit() if limit is None else limit
    dec = decompose(g, delta) if dec is None else dec
    kr = kernelize(g, dec, delta, k)
    if kr.guaranteed_yes:
        answer = True
    else:
        alpha0, _ = max_independent_set(kr.g0, limit)
        answer = meets_bound(alpha0, kr.n0, delta, k)
    certificate = None
    if answer:
        try:
            certificate = certificate_for(g, delta, dec, limit)
        except ExactLimitError:
            if not kr.guaranteed_yes:
                raise
    return Decision(answer, certificate, kr)


def certificate_for(g: Graph, delta: int, dec: Decomposition, limit: int | None = None) -> tuple[int, ...]:
    """A maximum independent set of G built from the residual part."""
    residual, mapping = induced_subgraph(g, dec.residual)
    _, s = max_independent_set(residual, limit)
    return extend_solution(g, delta, dec, [mapping[i] for i in s])
