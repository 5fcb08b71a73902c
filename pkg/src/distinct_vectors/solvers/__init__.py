"""Regime classification, exact solvers and the homogeneous polynomial solver."""

from .dispatch import STRATEGIES, SolveResult, solve
from .exact import (
    ORACLE_MAX_COLS,
    ORACLE_MAX_ROWS,
    minimum_solution_oracle,
    solve_exact_branching,
    solve_exact_subsets,
)
from .homogeneous import (
    PolyResult,
    WeightClassAnalysis,
    analyze_weight_classes,
    poly_homogeneous_run,
    solve_poly_homogeneous,
)
from .matching import hall_matching
from .regime import Regime, RegimeTag, classify

__all__ = [
    "ORACLE_MAX_COLS",
    "ORACLE_MAX_ROWS",
    "PolyResult",
    "STRATEGIES",
    "Regime",
    "RegimeTag",
    "SolveResult",
    "WeightClassAnalysis",
    "analyze_weight_classes",
    "classify",
    "hall_matching",
    "minimum_solution_oracle",
    "poly_homogeneous_run",
    "solve",
    "solve_exact_branching",
    "solve_exact_subsets",
    "solve_poly_homogeneous",
]
