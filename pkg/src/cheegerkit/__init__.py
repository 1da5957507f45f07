"""Exact edge-expansion certificates and expander decompositions for finite graphs."""

from .cheeger import (
    INF,
    CheegerResult,
    HigherCheegerResult,
    cheeger,
    enumerate_folner,
    find_small_folner,
    folner_ratio,
    heuristic_cheeger,
    higher_order_cheeger,
    is_expander,
    is_folner,
)
from .exceptions import (
    BudgetExceededError,
    CapExceededError,
    CheegerKitError,
    DomainError,
    GraphParseError,
    InvariantViolation,
    ParameterError,
)
from .graph import (
    Graph,
    all_pairs_distances,
    boundary,
    format_graph,
    induced_subgraph,
    is_connected,
    max_degree,
    parse_graph,
    relative_boundary,
)

__version__ = "0.1.0"
