"""chromagen: exact generating functions for chromatic polynomials of
layered graphs, built from an automatically constructed symbolic transfer
matrix, with a brute-force oracle for verification."""

from .algebra import (InexactDivisionError, PolyC, PolyZC, Rat, RatFunc,
                      SingularSystemError, bivar_gcd, falling_factorial_poly,
                      series_coefficients, solve_linear_system)
from .genfunc import GenFunc, generating_function, gf_cartesian, gf_grid
from .graphs import (Connector, Graph, GraphParseError, adjacency,
                     build_layered_graph, connector_from_pairs, cycle_graph,
                     edgeless_graph, graph_from_edges, monogamy_connector,
                     parse_connector, parse_graph, path_graph)
from .oracle import (ORACLE_VERTEX_LIMIT, OracleLimitError, SeriesCheck,
                     VerificationReport, chromatic_poly_bruteforce,
                     count_proper_colorings, verify_series)
from .render import render
from .states import CanonState, canonicalize, enumerate_states, state_color_count
from .transfer import (FRESH, TransferMatrix, forbidden_sets, initial_vector,
                       option_sets, transfer_entry, transfer_matrix)

__version__ = "0.1.0"

__all__ = [
    "Rat", "PolyC", "PolyZC", "RatFunc",
    "InexactDivisionError", "SingularSystemError",
    "falling_factorial_poly", "bivar_gcd", "solve_linear_system",
    "series_coefficients",
    "Graph", "Connector", "GraphParseError",
    "graph_from_edges", "connector_from_pairs", "parse_graph",
    "parse_connector", "path_graph", "edgeless_graph", "cycle_graph",
    "monogamy_connector", "adjacency", "build_layered_graph",
    "CanonState", "canonicalize", "enumerate_states", "state_color_count",
    "FRESH", "TransferMatrix", "forbidden_sets", "option_sets",
    "transfer_entry", "transfer_matrix", "initial_vector",
    "GenFunc", "generating_function", "gf_cartesian", "gf_grid",
    "ORACLE_VERTEX_LIMIT", "OracleLimitError", "SeriesCheck",
    "VerificationReport", "count_proper_colorings",
    "chromatic_poly_bruteforce", "verify_series",
    "render",
]
