"""Matrix representation, distance arithmetic, column systems and file I/O.

All public row and column indices are 1-based. Binary matrices (alphabet a
subset of {0, 1}) additionally carry a packed representation: every row is a
Python int whose bit ``j - 1`` is set iff the entry in column ``j`` is 1, so
weights, distances and intersections are popcounts of single ints.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import ContractError, DomainError, MatrixParseError

if TYPE_CHECKING:
    from .sunflowers import SetFamily

Grid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Matrix:
    """An n x d matrix of non-negative integer symbols with distinct rows."""

    rows: Grid

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise DomainError("a matrix needs at least one row")
        width = len(rows[0])
        seen: dict[tuple[int, ...], int] = {}
        for i, row in enumerate(rows, start=1):
            if len(row) != width:
                raise DomainError(f"row {i} has {len(row)} entries, expected {width}")
            if any(x < 0 for x in row):
                raise DomainError(f"row {i} contains a negative symbol")
            if row in seen:
                raise ContractError(f"duplicate rows: row {i} equals row {seen[row]}")
            seen[row] = i

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def d(self) -> int:
        return len(self.rows[0])

    @cached_property
    def alphabet(self) -> frozenset[int]:
        symbols = frozenset(x for row in self.rows for x in row)
        # a 1 x 0 matrix has no entries; treat its alphabet as {0}
        return symbols or frozenset({0})

    @property
    def is_binary(self) -> bool:
        return self.alphabet <= {0, 1}

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        """Packed rows; only defined for binary matrices."""
        self.require_binary()
        return tuple(_pack(row) for row in self.rows)

    @cached_property
    def column_masks(self) -> tuple[int, ...]:
        """Packed columns (bit ``i - 1`` = row i has a 1); binary only."""
        self.require_binary()
        return tuple(
            sum(1 << i for i, row in enumerate(self.rows) if row[j])
            for j in range(self.d)
        )

    def require_binary(self) -> None:
        if not self.is_binary:
            raise DomainError("operation requires a binary (0/1) matrix")

    def row(self, i: int) -> tuple[int, ...]:
        _check_index(i, self.n, "row")
        return self.rows[i - 1]

    def column(self, j: int) -> tuple[int, ...]:
        _check_index(j, self.d, "column")
        return tuple(row[j - 1] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(col) for col in zip(*self.rows)] if self.d else []

    def ones(self, i: int) -> frozenset[int]:
        """The set of 1-based columns where binary row ``i`` equals 1."""
        self.require_binary()
        return frozenset(j for j, x in enumerate(self.row(i), start=1) if x)

    def select_columns(self, columns: Iterable[int]) -> Matrix:
        """Submatrix on the given columns (in the given order); rows must stay distinct."""
        return Matrix(restrict(self, columns, sort=False))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], n: int | None = None) -> Matrix:
        if not columns:
            if n is None:
                raise DomainError("row count required for a matrix without columns")
            return cls(tuple(() for _ in range(n)))
        return cls(tuple(zip(*columns)))

    def __str__(self) -> str:
        return format_matrix(self).rstrip("\n")


@dataclass(frozen=True)
class Solution:
    """A set of retained 1-based column indices, stored sorted."""

    columns: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cols = tuple(sorted({int(j) for j in self.columns}))
        if cols and cols[0] < 1:
            raise DomainError(f"column index {cols[0]} is below 1")
        object.__setattr__(self, "columns", cols)

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    def __contains__(self, j: object) -> bool:
        return j in self.columns

    def __str__(self) -> str:
        return format_solution(self)


@dataclass(frozen=True)
class Instance:
    """A matrix together with the budget of columns that may be retained.

    The budget may exceed the column count; such instances are trivially
    yes-instances and ``t`` is then negative.
    """

    matrix: Matrix
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise DomainError(f"budget k must be non-negative, got {self.k}")

    @property
    def t(self) -> int:
        return self.matrix.d - self.k


@dataclass(frozen=True)
class DistanceProfile:
    min_distance: int
    max_distance: int

    def as_tuple(self) -> tuple[int, int]:
        return self.min_distance, self.max_distance


def _pack(row: Sequence[int]) -> int:
    mask = 0
    for j, x in enumerate(row):
        if x:
            mask |= 1 << j
    return mask


def _check_index(i: int, upper: int, what: str) -> None:
    if not 1 <= i <= upper:
        raise DomainError(f"{what} index {i} outside [1, {upper}]")


def mask_to_columns(mask: int) -> list[int]:
    """1-based column indices of the set bits of ``mask``."""
    cols = []
    j = 1
    while mask:
        if mask & 1:
            cols.append(j)
        mask >>= 1
        j += 1
    return cols


def columns_to_mask(columns: Iterable[int]) -> int:
    mask = 0
    for j in columns:
        mask |= 1 << (j - 1)
    return mask


# -- distance arithmetic ---------------------------------------------------


def weight(row: Sequence[int]) -> int:
    """Number of 1-entries of a binary row."""
    if any(x not in (0, 1) for x in row):
        raise DomainError("weight is only defined for binary rows")
    return sum(row)


def hamming(x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise DomainError(f"rows of different length ({len(x)} vs {len(y)})")
    return sum(1 for a, b in zip(x, y) if a != b)


def difference_mask(m: Matrix, i: int, j: int) -> int:
    """Packed difference set of rows ``i`` and ``j`` (1-based)."""
    if m.is_binary:
        return m.row_masks[i - 1] ^ m.row_masks[j - 1]
    return _pack([a != b for a, b in zip(m.rows[i - 1], m.rows[j - 1])])


def difference_set(m: Matrix, i: int, j: int) -> frozenset[int]:
    _check_index(i, m.n, "row")
    _check_index(j, m.n, "row")
    if i == j:
        raise DomainError("difference set needs two distinct rows")
    return frozenset(mask_to_columns(difference_mask(m, i, j)))


def pair_difference_masks(m: Matrix) -> list[tuple[int, int, int]]:
    """``(i, j, mask)`` for every pair ``i < j`` in lexicographic order."""
    return [
        (i, j, difference_mask(m, i, j))
        for i, j in combinations(range(1, m.n + 1), 2)
    ]


def distance_profile(m: Matrix) -> DistanceProfile:
    if m.n < 2:
        raise DomainError("distance profile needs at least two rows")
    dists = [mask.bit_count() for _, _, mask in pair_difference_masks(m)]
    return DistanceProfile(min(dists), max(dists))


# -- restriction and verification ------------------------------------------


def _column_list(m: Matrix, columns: Iterable[int], sort: bool = True) -> list[int]:
    cols = list(columns)
    for j in cols:
        _check_index(j, m.d, "column")
    return sorted(set(cols)) if sort else cols


def restrict(m: Matrix, columns: Iterable[int], sort: bool = True) -> Grid:
    """Rows of ``m`` restricted to ``columns``; may contain equal rows."""
    idx = [j - 1 for j in _column_list(m, columns, sort)]
    return tuple(tuple(row[j] for j in idx) for row in m.rows)


def is_distinguishing(m: Matrix, columns: Iterable[int]) -> bool:
    """Whether the rows stay pairwise distinct on ``columns``.

    Restricted rows are sorted lexicographically and neighbours compared.
    """
    cols = _column_list(m, columns)
    if m.is_binary:
        keep = columns_to_mask(cols)
        projected = sorted(r & keep for r in m.row_masks)
    else:
        projected = sorted(restrict(m, cols))
    return all(a != b for a, b in zip(projected, projected[1:]))


# -- column structure ------------------------------------------------------


def column_system(m: Matrix, rows: Iterable[int]) -> SetFamily:
    from .sunflowers import SetFamily

    m.require_binary()
    return SetFamily([m.ones(i) for i in sorted(set(rows))])


def column_partition(m: Matrix, j: int) -> list[frozenset[int]]:
    """Rows grouped by their symbol in column ``j``, blocks ordered by first row."""
    blocks: dict[int, list[int]] = {}
    for i, x in enumerate(m.column(j), start=1):
        blocks.setdefault(x, []).append(i)
    return [frozenset(b) for b in blocks.values()]


# -- file formats ----------------------------------------------------------


def parse_matrix(text: str) -> Matrix:
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = [tok.strip() for tok in line.split(",")] if line.strip() else []
        row = []
        for tok in tokens:
            if not tok.isdigit():
                raise MatrixParseError(f"not a non-negative integer: {tok!r}", lineno)
            row.append(int(tok))
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise MatrixParseError(f"ragged rows: {len(row)} entries, expected {width}", lineno)
        rows.append(tuple(row))
    if not rows:
        raise MatrixParseError("empty matrix file")
    seen: dict[tuple[int, ...], int] = {}
    for lineno, row in enumerate(rows, start=1):
        if row in seen:
            raise ContractError(f"line {lineno}: duplicate rows (same as line {seen[row]})")
        seen[row] = lineno
    return Matrix(tuple(rows))


def format_matrix(m: Matrix) -> str:
    return "".join(",".join(map(str, row)) + "\n" for row in m.rows)


def load_matrix(path: str | os.PathLike) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def save_matrix(m: Matrix, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_matrix(m))


def parse_solution(text: str) -> Solution:
    text = text.strip()
    if not text:
        return Solution()
    try:
        cols = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise MatrixParseError(f"malformed column list: {text!r}") from None
    if len(set(cols)) != len(cols):
        raise DomainError("column list contains duplicates")
    return Solution(tuple(cols))


def format_solution(sol: Solution | Iterable[int]) -> str:
    return ",".join(map(str, sorted(sol)))
