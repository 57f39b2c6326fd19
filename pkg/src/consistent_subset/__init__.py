"""Exact solvers and tooling for minimum consistent subsets of
vertex-coloured graphs.

A subset C of the vertices is *consistent* when every vertex outside C
has, among its nearest C-members by hop distance, at least one of its
own colour.  The package provides:

* an exact path solver (plain and anchored variants),
* an exact-for-cases-1-and-2, validated-heuristic spider solver,
* a brute-force oracle for small graphs,
* a MAX-2SAT-to-coloured-tree instance generator with witness subsets,
* a command-line interface (``mcs``).
"""

from .errors import ContractError, InputError, InternalError, ResourceLimitError
from .graph import (
    ColouredGraph,
    ConsistencyReport,
    bfs_distances,
    dump_graph_json,
    graph_from_json_obj,
    graph_to_dot,
    graph_to_json_obj,
    is_consistent,
    load_graph_json,
    nearest_in_subset,
)
from .oracle import OracleConfig, OracleResult, oracle_mcs
from .paths import AnchorConstraint, feasible_pair, solve_path, solve_path_anchored
from .reduction import (
    Cnf2,
    ReductionTree,
    build_reduction,
    count_satisfied,
    expected_size,
    extract_assignment,
    parse_cnf,
    validate_tree,
    witness_subset,
)
from .spider import CaseLabel, Spider, SpiderSolution, classify, solve_spider

__all__ = [
    "AnchorConstraint",
    "CaseLabel",
    "Cnf2",
    "ColouredGraph",
    "ConsistencyReport",
    "ContractError",
    "InputError",
    "InternalError",
    "OracleConfig",
    "OracleResult",
    "ReductionTree",
    "ResourceLimitError",
    "Spider",
    "SpiderSolution",
    "bfs_distances",
    "build_reduction",
    "classify",
    "count_satisfied",
    "dump_graph_json",
    "expected_size",
    "extract_assignment",
    "feasible_pair",
    "graph_from_json_obj",
    "graph_to_dot",
    "graph_to_json_obj",
    "is_consistent",
    "load_graph_json",
    "nearest_in_subset",
    "oracle_mcs",
    "parse_cnf",
    "solve_path",
    "solve_path_anchored",
    "solve_spider",
    "validate_tree",
    "witness_subset",
]
