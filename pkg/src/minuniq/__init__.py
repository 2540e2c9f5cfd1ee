"""minuniq: min-uniqueness machinery for directed graphs, executable at desk scale.

Prime-hash weight isolation, an audited unambiguous reachability decider,
exact path counting via weight queries, machine-class predicates over
configuration graphs, and the page-embedding / shortest-path-length
reductions, all checked against brute-force oracles.
"""

from .graphs import (
    OVERFLOW,
    DiGraph,
    ExpandedGraph,
    MinUniqueReport,
    PathList,
    VertexMin,
    WeightFn,
    count_paths_capped,
    enumerate_paths,
    expand_weights,
    is_min_unique_wrt,
    min_unique_report,
    reach,
)
from .errors import (
    AuditAnomalyError,
    BudgetExceededError,
    ContractViolationError,
    InputError,
    PrimeSearchExhaustedError,
)

__all__ = [
    "DiGraph",
    "WeightFn",
    "MinUniqueReport",
    "VertexMin",
    "PathList",
    "ExpandedGraph",
    "OVERFLOW",
    "reach",
    "min_unique_report",
    "is_min_unique_wrt",
    "enumerate_paths",
    "count_paths_capped",
    "expand_weights",
    "InputError",
    "ContractViolationError",
    "BudgetExceededError",
    "PrimeSearchExhaustedError",
    "AuditAnomalyError",
]

__version__ = "0.1.0"
