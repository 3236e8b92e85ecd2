"""Command-line front end.

Results go to stdout (or ``--output``) as JSON; diagnostics go to stderr.
Exit status: 0 success, 1 a "no" answer from ``decide``, 2 bad input,
invalid instance or an exact stage over the size limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .catalog import TightKind
from .decompose import decompose
from .exact import EXACT_LIMIT_ENV, ExactLimitError, default_exact_limit
from .generators import GenerationError, GenSpec, gen_mixed, gen_random_bounded, gen_tight_union
from .graph import Graph, InvalidInstanceError, check_instance
from .io import (ParseError, decision_json, decomposition_json, error_json, excess_json, format_dimacs,
                 kernel_json, read_dimacs, solution_json, violation_json)
from .kernel import approximate_excess, certificate_for, decide_atlb, kernelize
from .validation import check_delta, check_k
from .verify import check_free_bound, verify_decomposition, verify_kernel

log = logging.getLogger("tightkernel")

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    delta: int
    input: str = "-"
    output: str | None = None
    k: Fraction | None = None
    exact_limit: int | None = None
    seed: int = 0
    fmt: str = "dimacs"
    gen: dict[str, Any] | None = None


class UsageError(ValueError):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--delta", type=int, required=True, help="degree and clique bound Δ (≥ 3)")
    common.add_argument("--output", "-o", help="write the result here instead of stdout")
    common.add_argument("--exact-limit", type=int, default=None,
                        help=f"largest graph for the exact solver (default ${EXACT_LIMIT_ENV} or 60)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", dest="fmt", choices=["dimacs"], default="dimacs")
    common.add_argument("-v", "--verbose", action="store_true")

    reading = argparse.ArgumentParser(add_help=False)
    reading.add_argument("--input", "-i", default="-", help="DIMACS graph file, '-' for stdin")

    with_k = argparse.ArgumentParser(add_help=False)
    with_k.add_argument("--k", required=True, help="non-negative rational, e.g. 2 or 3/4")

    p = argparse.ArgumentParser(prog="tightkernel",
                                description="Decompositions and kernels for α(G) ≥ n/Δ + k.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("decompose", parents=[common, reading], help="A/B/C/D decomposition")
    sub.add_parser("approx", parents=[common, reading], help="bounds on α(G) - n/Δ")
    sub.add_parser("kernel", parents=[common, reading, with_k], help="kernel graph and metadata")
    sub.add_parser("decide", parents=[common, reading, with_k], help="is α(G) ≥ n/Δ + k?")
    sub.add_parser("solve", parents=[common, reading], help="α(G) and a maximum independent set")
    v = sub.add_parser("verify", parents=[common, reading], help="check every decomposition guarantee")
    v.add_argument("--k", default=None, help="also verify the kernel for this k")
    g = sub.add_parser("gen", parents=[common], help="generate an instance")
    g.add_argument("--counts", default="",
                   help="tight pieces as kind=count pairs, e.g. clique=10,c8_squared=2")
    g.add_argument("--extra", type=int, default=0, help="extra isolated vertices")
    g.add_argument("--matching", type=int, default=0, help="random matching edges to add")
    g.add_argument("--random", type=int, default=None, metavar="N",
                   help="random bounded graph on N vertices instead of a tight union")
    g.add_argument("--attempts", type=int, default=None, help="edge attempts for --random (default 2N)")
    g.add_argument("--mixed", type=int, default=None, metavar="N",
                   help="mixed fuzzing instance of about N vertices")
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    delta = check_delta(ns.delta)
    k = check_k(ns.k) if getattr(ns, "k", None) is not None else None
    gen = None
    if ns.command == "gen":
        gen = {"counts": _parse_counts(ns.counts), "extra": ns.extra, "matching": ns.matching,
               "random": ns.random, "attempts": ns.attempts, "mixed": ns.mixed}
    return RunConfig(ns.command, delta, getattr(ns, "input", "-"), ns.output, k, ns.exact_limit, ns.seed,
                     ns.fmt, gen)


def _parse_counts(text: str) -> dict[TightKind, int]:
    counts: dict[TightKind, int] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, _, num = item.partition("=")
        try:
            counts[TightKind(name.strip())] = int(num)
        except ValueError:
            kinds = ", ".join(k.value for k in TightKind)
            raise UsageError(f"bad --counts entry {item!r}; kinds are {kinds}") from None
    return counts


def _load(cfg: RunConfig) -> Graph:
    g = read_dimacs(sys.stdin if cfg.input == "-" else cfg.input)
    check_instance(g, cfg.delta)
    log.info("read graph with n=%d m=%d", g.n, g.m)
    return g


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(cfg: RunConfig, record: dict[str, Any]) -> None:
    _emit(cfg, json.dumps(record, indent=2, ensure_ascii=False) + "\n")


def run(cfg: RunConfig) -> int:
    limit = default_exact_limit() if cfg.exact_limit is None else cfg.exact_limit
    if cfg.command == "gen":
        g = _generate(cfg)
        comments = [f"tightkernel gen delta={cfg.delta} seed={cfg.seed}"]
        _emit(cfg, format_dimacs(g, comments))
        return EXIT_OK

    g = _load(cfg)
    dec = decompose(g, cfg.delta)
    if cfg.command == "decompose":
        _emit_json(cfg, decomposition_json(dec))
    elif cfg.command == "approx":
        _emit_json(cfg, excess_json(approximate_excess(dec, g.n, cfg.delta), g.n, cfg.delta))
    elif cfg.command == "kernel":
        _emit_json(cfg, kernel_json(kernelize(g, dec, cfg.delta, cfg.k)))
    elif cfg.command == "decide":
        d = decide_atlb(g, cfg.delta, cfg.k, limit, dec=dec)
        if d.answer and d.certificate is None:
            log.warning("answer is yes but the residual graph is too large for a certificate")
        _emit_json(cfg, decision_json(d))
        return EXIT_OK if d.answer else EXIT_NO
    elif cfg.command == "solve":
        witness = certificate_for(g, cfg.delta, dec, limit)
        _emit_json(cfg, solution_json(len(witness), witness, g.n, cfg.delta))
    elif cfg.command == "verify":
        _emit_json(cfg, _verify(g, cfg, dec, limit))
    return EXIT_OK


def _verify(g, cfg, dec, limit):
    report = verify_decomposition(g, cfg.delta, dec, use_exact=True, limit=limit)
    out = {"schema": 1, "kind": "verification", "delta": cfg.delta, "n": g.n, **report.to_dict()}
    if g.n <= limit:
        fb = check_free_bound(g, cfg.delta, limit)
        out["free_bound"] = {"passed": fb.passed, "alpha": fb.alpha, "m": fb.m,
                             "bound": f"{fb.bound.numerator}/{fb.bound.denominator}"}
        out["passed"] = out["passed"] and fb.passed
    if cfg.k is not None and g.n <= limit:
        kr = verify_kernel(g, kernelize(g, dec, cfg.delta, cfg.k), cfg.delta, cfg.k, limit)
        out["kernel"] = kr.to_dict()
        out["passed"] = out["passed"] and kr.passed
    return out


def _generate(cfg: RunConfig) -> Graph:
    opts = cfg.gen or {}
    if opts.get("random") is not None:
        n = opts["random"]
        attempts = opts["attempts"] if opts.get("attempts") is not None else 2 * n
        return gen_random_bounded(n, cfg.delta, attempts, cfg.seed)
    if opts.get("mixed") is not None:
        return gen_mixed(cfg.delta, opts["mixed"], cfg.seed)
    counts = opts.get("counts", {})
    for kind in counts:
        if not kind.valid_for(cfg.delta):
            raise UsageError(f"{kind.value} is not {cfg.delta}-tight")
    return gen_tight_union(GenSpec(cfg.delta, counts, opts.get("extra", 0), opts.get("matching", 0), cfg.seed))


def main(argv: Sequence[str] | None = None) -> int:
    ns = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(levelname)s: %(message)s")
    try:
        cfg = _config(ns)
        return run(cfg)
    except InvalidInstanceError as exc:
        log.error("invalid instance: %s", exc)
        print(json.dumps(violation_json(exc.violation)))
        return EXIT_ERROR
    except ExactLimitError as exc:
        log.error("%s", exc)
        print(json.dumps(error_json(str(exc), n=exc.n, limit=exc.limit)))
        return EXIT_ERROR
    except (ParseError, UsageError, GenerationError, ValueError, OSError) as exc:
        log.error("%s", exc)
        print(json.dumps(error_json(str(exc))))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
