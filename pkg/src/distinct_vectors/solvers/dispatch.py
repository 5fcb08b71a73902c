"""Strategy dispatcher."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import DomainError
from ..matrix import Instance, Matrix, Solution, distance_profile
from ..reductions import inessential_reduction, preprocess_binary
from .exact import solve_exact_branching, solve_exact_subsets
from .homogeneous import poly_homogeneous_run, solve_reduced
from .regime import Regime, classify

STRATEGIES = ("auto", "exact", "branch", "poly")


@dataclass
class SolveResult:
    solution: Solution | None
    strategy: str
    path: list[str] = field(default_factory=list)
    regime: Regime | None = None
    details: dict = field(default_factory=dict)

    @property
    def answer(self) -> bool:
        return self.solution is not None


def as_binary(m: Matrix) -> Matrix | None:
    """Relabel a matrix over at most two symbols to {0, 1}; None if impossible."""
    if m.is_binary:
        return m
    symbols = sorted(m.alphabet)
    if len(symbols) > 2:
        return None
    relabel = {symbols[0]: 0, symbols[-1]: 1}
    return Matrix(tuple(tuple(relabel[x] for x in row) for row in m.rows))


def solve(inst: Instance, strategy: str = "auto") -> SolveResult:
    """Minimum solution within budget (or None); identical answer for every strategy."""
    if strategy not in STRATEGIES:
        raise DomainError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
    m = inst.matrix
    if strategy == "exact":
        return SolveResult(solve_exact_subsets(inst), "exact", ["exact-subsets"])
    if strategy == "branch":
        return SolveResult(solve_exact_branching(inst), "branch", ["branching"])

    binary = as_binary(m)
    if strategy == "poly":
        if binary is None:
            raise DomainError("the polynomial solver handles binary matrices only")
        run = poly_homogeneous_run(Instance(binary, inst.k))
        return SolveResult(
            run.solution, "poly", ["preprocess", "inessential", "poly"], details=_poly_details(run)
        )

    if binary is None or m.n == 1:
        res = SolveResult(solve_exact_branching(inst), "auto", ["branching"])
        if m.n > 1:
            res.regime = classify(distance_profile(m), len(m.alphabet))
        return res

    pre, report = preprocess_binary(binary)
    reduced, report2 = inessential_reduction(pre)
    report = report.then(report2)
    path = ["preprocess", "inessential"]
    if reduced.n == 1:
        regime = None
    else:
        regime = classify(distance_profile(reduced), 2)
    details = {"reduced_shape": [reduced.n, reduced.d], "deleted_columns": report.deleted}
    if regime is None or regime.polynomial:
        run = solve_reduced(reduced, inst.k)
        path.append("poly")
        details.update(_poly_details(run))
        sol = run.solution
    else:
        path.append("branching")
        sol = solve_exact_branching(Instance(reduced, inst.k))
    if sol is not None:
        sol = Solution(tuple(report.lift(sol)))
    return SolveResult(sol, "auto", path, regime, details)


def _poly_details(run) -> dict:
    return {
        "gap": run.gap,
        "case": run.case,
        "candidates": run.candidates,
        "minimum_size": run.minimum_size,
        "reduced_profile": list(run.reduced_profile) if run.reduced_profile else None,
    }
