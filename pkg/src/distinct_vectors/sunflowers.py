"""Weak and strong delta-systems over sets of column indices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .matrix import Matrix, Solution


class SetFamily:
    """An ordered family of pairwise distinct finite sets.

    Duplicates collapse onto their first occurrence.
    """

    def __init__(self, sets: Iterable[Iterable[int]]):
        seen = {}
        for s in sets:
            fs = frozenset(s)
            seen.setdefault(fs, None)
        self.sets: tuple[frozenset[int], ...] = tuple(seen)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SetFamily):
            return set(self.sets) == set(other.sets)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.sets))

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in self.sets)
        return f"SetFamily([{inner}])"

    @property
    def uniform_size(self) -> int | None:
        sizes = {len(s) for s in self.sets}
        return sizes.pop() if len(sizes) == 1 else None

    def union(self) -> frozenset[int]:
        return frozenset().union(*self.sets)


@dataclass(frozen=True)
class Sunflower:
    family: SetFamily
    core: frozenset[int]
    petals: tuple[frozenset[int], ...]

    @property
    def lambda_(self) -> int:
        return len(self.core)

    def __len__(self) -> int:
        return len(self.petals)


def _require_pairs(f: SetFamily) -> None:
    if len(f) < 2:
        raise DomainError("intersection pattern needs at least two sets")


def weak_delta_lambda(f: SetFamily) -> int | None:
    """The common pairwise intersection size, or None if sizes differ."""
    _require_pairs(f)
    sets = f.sets
    lam = len(sets[0] & sets[1])
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if len(sets[i] & sets[j]) != lam:
                return None
    return lam


def sunflower_core(f: SetFamily) -> Sunflower | None:
    """The sunflower structure of ``f`` if all pairwise intersections coincide."""
    _require_pairs(f)
    core = f.sets[0] & f.sets[1]
    owner: dict[int, int] = {}
    for idx, s in enumerate(f.sets):
        if not core <= s:
            return None
        for x in s - core:
            if owner.setdefault(x, idx) != idx:
                return None
    return Sunflower(f, core, tuple(s - core for s in f.sets))


def deza_threshold(s: int) -> int:
    """Size from which an s-uniform weak delta-system must be a sunflower."""
    return s * s - s + 2


def solve_sunflower(m: Matrix) -> Solution:
    """Minimum distinguishing set when the non-null rows form a sunflower.

    Takes the smallest column of every non-empty petal, plus the smallest core
    column when one petal is empty. The result has exactly one column per
    non-null row.
    """
    m.require_binary()
    masks = m.row_masks
    if 0 not in masks:
        raise DomainError("matrix must contain the all-zero row")
    family = SetFamily(m.ones(i) for i in range(1, m.n + 1) if masks[i - 1])
    if len(family) == 0:
        return Solution()
    if len(family) == 1:
        return Solution((min(family.sets[0]),))
    flower = sunflower_core(family)
    if flower is None:
        raise DomainError("non-null rows do not form a sunflower")
    chosen = [min(p) for p in flower.petals if p]
    if len(chosen) < len(flower.petals):
        chosen.append(min(flower.core))
    return Solution(tuple(chosen))


def sunflower_intersection_check(
    f: Sunflower, x: Iterable[int], lam: int, verify_precondition: bool = False
) -> bool:
    """Whether a set meeting every member in ``lam`` elements meets the core likewise.

    When the family has more members than ``x`` has elements, ``x`` cannot
    reach ``lam`` in every petal, so it must do so inside the core. Returns
    the truth of ``lam <= |core|`` and ``|x & core| >= lam`` in that case and
    True otherwise. A False result means ``x`` does not meet every member in
    ``lam`` elements. With ``verify_precondition`` that situation raises.
    """
    if lam < 0:
        raise DomainError("lambda must be non-negative")
    xs = frozenset(x)
    if verify_precondition and any(len(xs & s) < lam for s in f.family):
        raise DomainError(f"set does not meet every member in {lam} elements")
    if len(f.family) > len(xs):
        return lam <= len(f.core) and len(xs & f.core) >= lam
    return True
