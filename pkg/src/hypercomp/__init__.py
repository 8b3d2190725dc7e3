"""Competition hypergraphs and hypercompetition numbers."""

from .bounds import BoundReport, best_lower_bound, lower_bound_degree, lower_bound_size
from .competition import (
    VerificationReport,
    Witness,
    acyclic_ordering,
    competition_hypergraph,
    verify_witness,
)
from .constructions import (
    EliminationOrdering,
    SpanningCertificate,
    construct_auto,
    find_elimination_ordering,
    find_spanning_certificate,
    witness_acyclic_uniform,
    witness_complete_uniform,
    witness_connected_graph,
    witness_degree_one,
    witness_fallback,
    witness_from_elimination,
    witness_with_extra_edges,
)
from .errors import BudgetExhausted, InputError, ParseError, ResourceError
from .exact import ExactResult, exact_hk, exact_hk_naive
from .formats import emit_digraph, emit_hypergraph, parse_digraph, parse_hypergraph, to_dot
from .hypercore import (
    CyclePath,
    Digraph,
    Hypergraph,
    connected_components,
    degree,
    find_cycle_bruteforce,
    has_no_cycle,
    uniformity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
