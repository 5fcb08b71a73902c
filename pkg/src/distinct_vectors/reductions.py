"""Answer-preserving data reduction rules.

Every rule only deletes (and, for binary preprocessing, complements) columns,
so a solution of the reduced matrix is a solution of the input on the same
original columns. ``ReductionReport.kept`` records that correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .matrix import Instance, Matrix


@dataclass(frozen=True)
class ReductionReport:
    rule: str
    input_columns: int
    kept: tuple[int, ...]
    complemented: frozenset[int] = frozenset()

    @property
    def deleted(self) -> int:
        return self.input_columns - len(self.kept)

    def then(self, later: ReductionReport) -> ReductionReport:
        """Compose with a report produced on this report's output matrix."""
        return ReductionReport(
            rule=f"{self.rule}+{later.rule}",
            input_columns=self.input_columns,
            kept=tuple(self.kept[j - 1] for j in later.kept),
            complemented=self.complemented
            | frozenset(self.kept[j - 1] for j in later.complemented),
        )

    def lift(self, columns) -> list[int]:
        """Map 1-based columns of the reduced matrix back to input columns."""
        return sorted(self.kept[j - 1] for j in columns)


def identity_report(m: Matrix, rule: str = "identity") -> ReductionReport:
    return ReductionReport(rule, m.d, tuple(range(1, m.d + 1)))


def _keep(m: Matrix, kept: list[int]) -> Matrix:
    if not kept:
        return Matrix.from_columns([], n=m.n)
    return m.select_columns(kept)


def preprocess_binary(m: Matrix) -> tuple[Matrix, ReductionReport]:
    """Make some row all-zero by complementing columns, then drop repeated columns.

    The pivot is the first all-zero row if one exists, else row 1. Among equal
    columns the lowest index survives; survivors keep their relative order.
    """
    m.require_binary()
    masks = m.row_masks
    pivot = masks.index(0) if 0 in masks else 0
    pivot_row = m.rows[pivot]
    flipped = frozenset(j for j, x in enumerate(pivot_row, start=1) if x)
    first: dict[tuple[int, ...], int] = {}
    for j, col in enumerate(m.columns(), start=1):
        if j in flipped:
            col = tuple(1 - x for x in col)
        first.setdefault(col, j)
    kept = sorted(first.values())
    columns = [first_col for first_col, _ in sorted(first.items(), key=lambda kv: kv[1])]
    out = Matrix.from_columns(columns, n=m.n)
    report = ReductionReport(
        "preprocess", m.d, tuple(kept), frozenset(j for j in kept if j in flipped)
    )
    return out, report


def _exactly_distinguishes(col: tuple[int, ...]) -> bool:
    counts: dict[int, int] = {}
    for x in col:
        counts[x] = counts.get(x, 0) + 1
    if len(col) == 1:
        return True
    return len(counts) == 2 and 1 in counts.values()


def _distinct_without(m: Matrix, j: int) -> bool:
    if m.is_binary:
        drop = ~(1 << (j - 1))
        return len({r & drop for r in m.row_masks}) == m.n
    return len({row[: j - 1] + row[j:] for row in m.rows}) == m.n


def find_inessential_columns(m: Matrix) -> frozenset[int]:
    """Columns that single out one row and whose removal keeps rows distinct."""
    return frozenset(
        j
        for j, col in enumerate(m.columns(), start=1)
        if _exactly_distinguishes(col) and _distinct_without(m, j)
    )


def inessential_reduction(m: Matrix) -> tuple[Matrix, ReductionReport]:
    """Delete inessential columns one at a time, lowest index first.

    Deleting a column never makes another column inessential: the first
    condition depends only on the column itself and the second can only
    fail more often on fewer columns. One left-to-right sweep that re-checks
    against the current matrix is therefore exhaustive.
    """
    m.require_binary()
    current = m
    kept = list(range(1, m.d + 1))
    pos = 1
    while pos <= current.d:
        col = current.column(pos)
        if _exactly_distinguishes(col) and _distinct_without(current, pos):
            del kept[pos - 1]
            remaining = [j for j in range(1, current.d + 1) if j != pos]
            current = _keep(current, remaining)
        else:
            pos += 1
    return current, ReductionReport("inessential", m.d, tuple(kept))


def apply_rule_inessential(m: Matrix) -> Matrix:
    return inessential_reduction(m)[0]


def _canonical_labels(col: tuple[int, ...]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in col)


def _refines(fine: tuple[int, ...], coarse: tuple[int, ...]) -> bool:
    image: dict[int, int] = {}
    for a, b in zip(fine, coarse):
        if image.setdefault(a, b) != b:
            return False
    return True


def dominance_reduction(m: Matrix) -> tuple[Matrix, ReductionReport]:
    """Delete every column whose row partition is refined by another column.

    Among columns inducing the same partition the smallest index survives.
    """
    labels = [_canonical_labels(col) for col in m.columns()]
    # equal partitions have equal canonical labels; keep the first of each
    classes: dict[tuple[int, ...], int] = {}
    for j, lab in enumerate(labels, start=1):
        classes.setdefault(lab, j)
    reps = list(classes.items())
    kept = []
    for lab, j in reps:
        dominated = any(
            other != lab and _refines(other, lab) for other, _ in reps
        )
        if not dominated:
            kept.append(j)
    kept.sort()
    return _keep(m, kept), ReductionReport("dominance", m.d, tuple(kept))


def dominance_reduce(m: Matrix) -> Matrix:
    return dominance_reduction(m)[0]


def budget_lower_bound(m: Matrix) -> int:
    """Smallest t with |alphabet|^t >= n; fewer columns cannot separate n rows."""
    q = len(m.alphabet)
    if m.n == 1:
        return 0
    if q < 2:
        raise DomainError("rows over a one-symbol alphabet cannot be distinguished")
    t, reach = 0, 1
    while reach < m.n:
        reach *= q
        t += 1
    return t


def kernelize_sigma_k(inst: Instance) -> Instance | None:
    """Kernel in (|alphabet|, k); None signals a definite no-instance."""
    m = inst.matrix
    if m.n > len(m.alphabet) ** inst.k:
        return None
    return Instance(dominance_reduce(m), inst.k)
