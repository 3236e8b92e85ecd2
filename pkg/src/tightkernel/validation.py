"""Input coercion for the estimator layer and the CLI."""

from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Any

import networkx as nx
import numpy as np
import scipy.sparse as sp
from sklearn.utils import check_array

from .graph import Graph, InstanceParams, build_graph, check_instance
from .kernel import parse_rational


def check_graph(X: Any) -> Graph:
    """Coerce ``X`` to a :class:`Graph`.

    Accepts a Graph, a networkx graph (nodes relabelled in sorted order), an
    ``(n, edges)`` pair, or a square symmetric 0/1 adjacency matrix (dense or
    scipy sparse) with an empty diagonal.
    """
    if isinstance(X, Graph):
        return X
    if isinstance(X, nx.Graph):
        if X.is_directed() or X.is_multigraph():
            raise ValueError("only simple undirected networkx graphs are accepted")
        nodes = sorted(X.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return build_graph(len(nodes), [(index[u], index[v]) for u, v in X.edges()])
    if isinstance(X, tuple) and len(X) == 2 and isinstance(X[0], numbers.Integral):
        n, edges = X
        return build_graph(int(n), [(int(u), int(v)) for u, v in edges])
    if sp.issparse(X) or isinstance(X, (np.ndarray, list)):
        return _from_matrix(X)
    raise TypeError(f"cannot interpret {type(X).__name__} as a graph")


def _from_matrix(X) -> Graph:
    if isinstance(X, (np.ndarray, list)) and np.asarray(X).size == 0:
        return build_graph(0, [])
    a = check_array(X, accept_sparse="coo", dtype=None, ensure_all_finite=True,
                    ensure_min_samples=0, ensure_min_features=0)
    a = sp.coo_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {a.shape}")
    a.eliminate_zeros()
    if np.any(a.data != 1):
        raise ValueError("adjacency matrix entries must be 0 or 1")
    if (abs(a - a.T)).nnz:
        raise ValueError("adjacency matrix must be symmetric")
    if np.any(a.row == a.col):
        raise ValueError("adjacency matrix must have an empty diagonal")
    keep = a.row < a.col
    return build_graph(a.shape[0], zip(a.row[keep].tolist(), a.col[keep].tolist()))


def check_delta(delta: Any) -> int:
    if isinstance(delta, bool) or not isinstance(delta, numbers.Integral):
        raise ValueError(f"delta must be an integer >= 3, got {delta!r}")
    return InstanceParams(int(delta)).delta


def check_k(k: Any) -> Fraction:
    try:
        k = parse_rational(k)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"k must be a non-negative rational such as 2 or 3/4, got {k!r}") from exc
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return k


def check_valid_instance(X: Any, delta: Any) -> tuple[Graph, int]:
    """Coerce and validate; raises InvalidInstanceError on a violation."""
    g = check_graph(X)
    d = check_delta(delta)
    check_instance(g, d)
    return g, d
