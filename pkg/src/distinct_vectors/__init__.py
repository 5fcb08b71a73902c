"""Toolkit for the Distinct Vectors problem.

Given a matrix with pairwise distinct rows, find at most k columns whose
restriction still keeps every row distinct.
"""

from .errors import ContractError, DomainError, DVError, MatrixParseError, RefusalError
from .generators import (
    Graph,
    from_graph_d3is,
    gen_random_profile,
    gen_sunflower,
    max_distance3_independent_set,
    pad_case1,
    pad_case2,
)
from .hitting_set import (
    HittingSetInstance,
    dv_to_hitting_set,
    g_bound,
    greedy_factor_h,
    hitting_set_to_dv,
    hs_kernelize,
    kernelize_h_k,
)
from .matrix import (
    DistanceProfile,
    Instance,
    Matrix,
    Solution,
    column_partition,
    column_system,
    difference_set,
    distance_profile,
    format_matrix,
    hamming,
    is_distinguishing,
    load_matrix,
    parse_matrix,
    restrict,
    save_matrix,
    weight,
)
from .reductions import (
    apply_rule_inessential,
    dominance_reduce,
    kernelize_sigma_k,
    preprocess_binary,
)
from .solvers import (
    Regime,
    RegimeTag,
    analyze_weight_classes,
    classify,
    hall_matching,
    minimum_solution_oracle,
    solve,
    solve_exact_branching,
    solve_exact_subsets,
    solve_poly_homogeneous,
)
from .sunflowers import (
    SetFamily,
    Sunflower,
    deza_threshold,
    solve_sunflower,
    sunflower_core,
    sunflower_intersection_check,
    weak_delta_lambda,
)

__all__ = [
    "analyze_weight_classes",
    "apply_rule_inessential",
    "classify",
    "column_partition",
    "column_system",
    "ContractError",
    "deza_threshold",
    "difference_set",
    "distance_profile",
    "DistanceProfile",
    "DomainError",
    "dominance_reduce",
    "dv_to_hitting_set",
    "DVError",
    "format_matrix",
    "from_graph_d3is",
    "g_bound",
    "gen_random_profile",
    "gen_sunflower",
    "Graph",
    "greedy_factor_h",
    "hall_matching",
    "hamming",
    "hitting_set_to_dv",
    "HittingSetInstance",
    "hs_kernelize",
    "Instance",
    "is_distinguishing",
    "kernelize_h_k",
    "kernelize_sigma_k",
    "load_matrix",
    "Matrix",
    "MatrixParseError",
    "max_distance3_independent_set",
    "minimum_solution_oracle",
    "pad_case1",
    "pad_case2",
    "parse_matrix",
    "preprocess_binary",
    "RefusalError",
    "Regime",
    "RegimeTag",
    "restrict",
    "save_matrix",
    "SetFamily",
    "Solution",
    "solve",
    "solve_exact_branching",
    "solve_exact_subsets",
    "solve_poly_homogeneous",
    "solve_sunflower",
    "Sunflower",
    "sunflower_core",
    "sunflower_intersection_check",
    "weak_delta_lambda",
    "weight",
]

__version__ = "0.1.0"
