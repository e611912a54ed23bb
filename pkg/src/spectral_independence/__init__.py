"""Spectral upper bounds on independence numbers of graphs and uniform hypergraphs."""

from __future__ import annotations

from .constructions import (
    join,
    join_bound_comparison,
    join_spectrum_regular,
    odd_bipartite_complete,
    pendant_graph,
    regular_graph,
)
from .errors import InputError, ParseError, Refusal
from .exact import exact_alpha, exact_alpha_t, power_graph, shannon_lower
from .graph import Graph, parse_graph, serialize_graph
from .graph_bounds import (
    all_graph_bounds,
    certify_theta,
    check_ratio_equality,
    haemers_bound,
    hoffman_bound,
    laplacian_bound,
    pendant_feasible,
    ratio_bound,
    theta_upper_group_inverse,
)
from .hypergraph import Hypergraph, SignedHypergraph, parse_hypergraph, serialize_hypergraph
from .hypergraph_bounds import (
    check_odd_t_equality,
    odd_t_bound,
    signed_even_t_bound,
    signing_search,
    strong_independence_bound,
)
from .linalg import Spectrum, group_inverse, sym_eigen, sym_eigvals
from .tensor_eigen import SolverConfig, exact_min_h_eigenvalue, min_h_eigenvalue, oracle_min_h

__version__ = "0.1.0"

__all__ = [
    "Graph", "Hypergraph", "SignedHypergraph", "Spectrum", "SolverConfig",
    "Refusal", "ParseError", "InputError",
    "parse_graph", "serialize_graph", "parse_hypergraph", "serialize_hypergraph",
    "sym_eigen", "sym_eigvals", "group_inverse",
    "hoffman_bound", "haemers_bound", "laplacian_bound", "ratio_bound", "all_graph_bounds",
    "check_ratio_equality", "theta_upper_group_inverse", "certify_theta", "pendant_feasible",
    "min_h_eigenvalue", "exact_min_h_eigenvalue", "oracle_min_h",
    "exact_alpha", "exact_alpha_t", "power_graph", "shannon_lower",
    "odd_t_bound", "check_odd_t_equality", "strong_independence_bound",
    "signed_even_t_bound", "signing_search",
    "odd_bipartite_complete", "pendant_graph", "join", "join_spectrum_regular",
    "regular_graph", "join_bound_comparison",
]
