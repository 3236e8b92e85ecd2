"""Decompositions, approximation and kernels for independent sets above n/Δ
in graphs with maximum degree and clique number at most Δ."""

from .catalog import (Family, TightKind, TightPiece, classify_tight, delta_free_vertices, find_structures,
                      free_diamonds_and_m, make_tight)
from .decompose import Decomposition, DecompositionError, decompose
from .estimators import ATLBKernelizer, TightDecomposer
from .exact import (ExactLimitError, ListColoringError, extend_solution, independence_number, list_color,
                    max_independent_set)
from .generators import GenerationError, GenSpec, gen_mixed, gen_random_bounded, gen_tight_union
from .graph import (Graph, GraphError, InstanceParams, InvalidInstanceError, Violation, build_graph,
                    connected_components, induced_subgraph, validate_instance)
from .io import format_dimacs, parse_dimacs, read_dimacs, write_dimacs
from .kernel import Branch, Decision, Excess, KernelResult, approximate_excess, decide_atlb, kernelize
from .profitable import NibbleError, ProfitableSet, check_profitable, find_nibble_target, nibble_phase
from .validation import check_delta, check_graph, check_k
from .verify import VerificationReport, check_free_bound, verify_decomposition, verify_kernel

__all__ = [
    "ATLBKernelizer", "Branch", "Decision", "Decomposition", "DecompositionError", "Excess",
    "ExactLimitError", "Family", "GenSpec", "GenerationError", "Graph", "GraphError", "InstanceParams",
    "InvalidInstanceError", "KernelResult", "ListColoringError", "NibbleError", "ProfitableSet",
    "TightDecomposer", "TightKind", "TightPiece", "VerificationReport", "Violation", "approximate_excess",
    "build_graph", "check_delta", "check_free_bound", "check_graph", "check_k", "check_profitable",
    "classify_tight", "connected_components", "decide_atlb", "decompose", "delta_free_vertices",
    "extend_solution", "find_nibble_target", "find_structures", "format_dimacs", "free_diamonds_and_m",
    "gen_mixed", "gen_random_bounded", "gen_tight_union", "independence_number", "induced_subgraph",
    "kernelize", "list_color", "make_tight", "max_independent_set", "nibble_phase", "parse_dimacs",
    "read_dimacs", "validate_instance", "verify_decomposition", "verify_kernel", "write_dimacs",
]
