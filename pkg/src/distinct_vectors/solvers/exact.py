"""Exact solvers: subset enumeration, a bounded search tree, and the test oracle."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from ..errors import RefusalError
from ..matrix import Instance, Matrix, Solution, columns_to_mask, mask_to_columns
from ..reductions import budget_lower_bound

ORACLE_MAX_ROWS = 10
ORACLE_MAX_COLS = 16


def _projector(m: Matrix):
    """Return a function telling whether a column tuple keeps rows distinct."""
    if m.is_binary:
        masks = m.row_masks

        def distinct(cols: Iterable[int]) -> bool:
            keep = columns_to_mask(cols)
            proj = sorted(r & keep for r in masks)
            return all(a != b for a, b in zip(proj, proj[1:]))

    else:
        rows = m.rows

        def distinct(cols: Iterable[int]) -> bool:
            idx = [j - 1 for j in cols]
            proj = sorted(tuple(row[j] for j in idx) for row in rows)
            return all(a != b for a, b in zip(proj, proj[1:]))

    return distinct


def first_distinguishing(
    m: Matrix,
    pool: Iterable[int],
    forced: Iterable[int] = (),
    min_size: int = 0,
    max_size: int | None = None,
) -> Solution | None:
    """Smallest ``forced | A`` with ``A`` a subset of ``pool`` that keeps rows distinct.

    Subsets are tried by size, then lexicographically, so the result is the
    lexicographically first among those of minimum size. ``max_size`` bounds
    the total size.
    """
    forced = sorted(set(forced))
    pool = sorted(set(pool) - set(forced))
    distinct = _projector(m)
    top = len(forced) + len(pool) if max_size is None else max_size
    start = max(0, min_size - len(forced))
    for size in range(start, len(pool) + 1):
        if len(forced) + size > top:
            break
        for extra in combinations(pool, size):
            cols = forced + list(extra)
            if distinct(cols):
                return Solution(tuple(cols))
    return None


def solve_exact_subsets(inst: Instance) -> Solution | None:
    """Minimum distinguishing set of size at most k by exhaustive enumeration."""
    m = inst.matrix
    if m.n == 1:
        return Solution()
    return first_distinguishing(
        m, range(1, m.d + 1), min_size=budget_lower_bound(m), max_size=min(inst.k, m.d)
    )


def _minimal_sets(masks: Iterable[int]) -> list[int]:
    """Drop duplicates and strict supersets; hitting the rest hits everything."""
    unique = sorted(set(masks), key=lambda s: (s.bit_count(), s))
    kept: list[int] = []
    for s in unique:
        if not any(t & s == t for t in kept):
            kept.append(s)
    return kept


def _pair_masks(m: Matrix) -> list[int]:
    if m.is_binary:
        rows = m.row_masks
        return [rows[i] ^ rows[j] for i, j in combinations(range(m.n), 2)]
    out = []
    for a, b in combinations(m.rows, 2):
        out.append(columns_to_mask(j for j, (x, y) in enumerate(zip(a, b), start=1) if x != y))
    return out


def _branch(sets: list[int], chosen: int, excluded: int, budget: int) -> int | None:
    # sets are ordered by size, so the first unhit one has the fewest branches
    target = None
    for s in sets:
        if not s & chosen:
            if not s & ~excluded:
                return None
            if target is None:
                target = s
    if target is None:
        return chosen
    if budget == 0:
        return None
    options = target & ~excluded
    while options:
        bit = options & -options
        options ^= bit
        found = _branch(sets, chosen | bit, excluded, budget - 1)
        if found is not None:
            return found
        excluded |= bit
    return None


def solve_exact_branching(inst: Instance) -> Solution | None:
    """Minimum solution via a depth-bounded search tree over difference sets.

    Each node picks the smallest difference set not yet hit and branches on
    its columns; iterative deepening on the budget yields a minimum solution.
    """
    m = inst.matrix
    if m.n == 1:
        return Solution()
    sets = _minimal_sets(_pair_masks(m))
    for budget in range(budget_lower_bound(m), min(inst.k, m.d) + 1):
        found = _branch(sets, 0, 0, budget)
        if found is not None:
            return Solution(tuple(mask_to_columns(found)))
    return None


def minimum_solution_oracle(
    m: Matrix, max_rows: int = ORACLE_MAX_ROWS, max_cols: int = ORACLE_MAX_COLS
) -> Solution:
    """Lexicographically first minimum distinguishing set, by brute force.

    Kept independent from the solvers: it tests every candidate against the
    raw pairwise difference sets instead of projecting rows.
    """
    if m.n > max_rows or m.d > max_cols:
        raise RefusalError(
            f"oracle limited to n <= {max_rows}, d <= {max_cols} (got {m.n}x{m.d})"
        )
    diffs = set()
    for a, b in combinations(m.rows, 2):
        diffs.add(frozenset(j for j in range(m.d) if a[j] != b[j]))
    for size in range(m.d + 1):
        for cols in combinations(range(m.d), size):
            chosen = set(cols)
            if all(chosen & dset for dset in diffs):
                return Solution(tuple(j + 1 for j in cols))
    raise AssertionError("the full column set always distinguishes distinct rows")
