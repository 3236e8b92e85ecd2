"""scikit-learn style wrappers.

A sample here is a whole graph, so ``fit`` and ``transform`` take one graph
in any form :func:`check_graph` accepts.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .decompose import Decomposition, decompose
from .graph import Graph, induced_subgraph
from .kernel import approximate_excess, decide_atlb, kernelize
from .validation import check_graph, check_k, check_valid_instance


class TightDecomposer(TransformerMixin, BaseEstimator):
    """Decompose a graph; ``transform`` returns G[B ∪ C ∪ D].

    Fitted attributes: ``decomposition_``, ``excess_``, ``mapping_`` (ids of
    the residual graph in the input graph) and ``n_vertices_``.
    """

    def __init__(self, delta: int = 3):
        self.delta = delta

    def fit(self, X, y=None):
        g, d = check_valid_instance(X, self.delta)
        self.graph_ = g
        self.decomposition_ = decompose(g, d)
        self.excess_ = approximate_excess(self.decomposition_, g.n, d)
        self.n_vertices_ = g.n
        _, self.mapping_ = induced_subgraph(g, self.decomposition_.residual)
        return self

    def transform(self, X) -> Graph:
        check_is_fitted(self, "decomposition_")
        g = check_graph(X)
        dec = self.decomposition_ if g == self.graph_ else self._decompose(g)
        return induced_subgraph(g, dec.residual)[0]

    def _decompose(self, g: Graph) -> Decomposition:
        g, d = check_valid_instance(g, self.delta)
        return decompose(g, d)


class ATLBKernelizer(TransformerMixin, BaseEstimator):
    """Kernel for α(G) ≥ n/Δ + k.

    ``transform`` returns the kernel graph G0 and ``predict`` the yes/no
    answer.  ``exact_limit`` caps the exact solver (None: library default).
    """

    def __init__(self, delta: int = 3, k=0, exact_limit: int | None = None):
        self.delta = delta
        self.k = k
        self.exact_limit = exact_limit

    def fit(self, X, y=None):
        g, d = check_valid_instance(X, self.delta)
        k = check_k(self.k)
        self.graph_ = g
        self.decomposition_ = decompose(g, d)
        self.kernel_ = kernelize(g, self.decomposition_, d, k)
        return self

    def _fitted_for(self, X):
        check_is_fitted(self, "kernel_")
        g = check_graph(X)
        if g == self.graph_:
            return g, self.decomposition_
        g, d = check_valid_instance(g, self.delta)
        return g, decompose(g, d)

    def transform(self, X) -> Graph:
        g, dec = self._fitted_for(X)
        if dec is self.decomposition_:
            return self.kernel_.g0
        return kernelize(g, dec, dec.delta, check_k(self.k)).g0

    def predict(self, X) -> bool:
        g, dec = self._fitted_for(X)
        self.decision_ = decide_atlb(g, dec.delta, check_k(self.k), self.exact_limit, dec=dec)
        return self.decision_.answer
