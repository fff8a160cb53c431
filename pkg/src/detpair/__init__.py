"""Detection pairs on graphs: watchers, listeners, exact and approximate solvers."""

from .detection import (
    DetectionPair,
    OracleResult,
    dp_oracle,
    find_violation,
    gamma_oracle,
    md_oracle,
    verify,
)
from .errors import (
    BadParam,
    DetPairError,
    Disconnected,
    NoSolutionWithin,
    NotATree,
    NotSpecialBranchingPoint,
    StemPresent,
    TooLarge,
    Uncoverable,
)
from .fpt import dp_tree, fpt_decide
from .graph import Graph, analyze_tree, bfs_distances, is_connected, is_tree
from .instances import (
    InstanceSpec,
    gen_random_graph,
    gen_random_tree,
    gen_t1,
    gen_t2,
    read_edge_list,
    write_edge_list,
)
from .setcover import approx_detection_pair
from .tree_approx import approx2_detection_pair
from .tree_exact import min_dominating_set_tree, slater_resolving_set

__all__ = [
    "BadParam",
    "DetPairError",
    "DetectionPair",
    "Disconnected",
    "Graph",
    "InstanceSpec",
    "NoSolutionWithin",
    "NotATree",
    "NotSpecialBranchingPoint",
    "OracleResult",
    "StemPresent",
    "TooLarge",
    "Uncoverable",
    "analyze_tree",
    "approx2_detection_pair",
    "approx_detection_pair",
    "bfs_distances",
    "dp_oracle",
    "dp_tree",
    "find_violation",
    "fpt_decide",
    "gamma_oracle",
    "gen_random_graph",
    "gen_random_tree",
    "gen_t1",
    "gen_t2",
    "is_connected",
    "is_tree",
    "md_oracle",
    "min_dominating_set_tree",
    "read_edge_list",
    "slater_resolving_set",
    "verify",
    "write_edge_list",
]
