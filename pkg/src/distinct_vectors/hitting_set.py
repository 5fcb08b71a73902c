"""Hitting Set bridge: reductions in both directions, greedy approximation, kernel."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from math import factorial

from .errors import ContractError, DomainError, MatrixParseError
from .matrix import (
    Instance,
    Matrix,
    Solution,
    distance_profile,
    mask_to_columns,
    pair_difference_masks,
)


@dataclass(frozen=True)
class HittingSetInstance:
    """Universe ``[1, universe_size]``, a collection of subsets and a budget.

    ``labels`` maps each element back to an element of the instance it was
    derived from (identity unless produced by ``hs_kernelize``).
    """

    universe_size: int
    sets: tuple[frozenset[int], ...]
    k: int
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.universe_size < 0:
            raise DomainError("universe size must be non-negative")
        if self.k < 0:
            raise DomainError(f"budget k must be non-negative, got {self.k}")
        sets = tuple(frozenset(s) for s in self.sets)
        for s in sets:
            for u in s:
                if not 1 <= u <= self.universe_size:
                    raise DomainError(f"element {u} outside [1, {self.universe_size}]")
        object.__setattr__(self, "sets", sets)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.universe_size + 1)))
        elif len(self.labels) != self.universe_size:
            raise DomainError("one label per universe element is required")

    @property
    def max_card(self) -> int:
        return max((len(s) for s in self.sets), default=0)

    def is_hitting_set(self, elements) -> bool:
        chosen = set(elements)
        return all(s & chosen for s in self.sets)


def dv_to_hitting_set(inst: Instance) -> HittingSetInstance:
    """Columns become elements, row pairs become the sets they must hit."""
    m = inst.matrix
    if m.n < 2:
        raise DomainError("the hitting set image needs at least two rows")
    seen: dict[int, None] = {}
    for _, _, mask in pair_difference_masks(m):
        seen.setdefault(mask, None)
    sets = tuple(frozenset(mask_to_columns(mask)) for mask in seen)
    return HittingSetInstance(m.d, sets, inst.k)


def hitting_set_to_dv(hs: HittingSetInstance) -> Instance:
    """Row i carries symbol i on the elements of set i; a null row closes the matrix."""
    for i, s in enumerate(hs.sets, start=1):
        if not s:
            raise DomainError(f"set {i} is empty and can never be hit")
    rows = [
        tuple(i if u in s else 0 for u in range(1, hs.universe_size + 1))
        for i, s in enumerate(hs.sets, start=1)
    ]
    rows.append((0,) * hs.universe_size)
    return Instance(Matrix(tuple(rows)), hs.k)


def greedy_factor_h(inst: Instance) -> Solution:
    """Distinguishing set within a factor H of optimal.

    Scans row pairs once in lexicographic order and takes the whole
    difference set of every pair not yet told apart. The chosen difference
    sets are pairwise disjoint, so any solution needs one column per set.
    """
    m = inst.matrix
    if m.n < 2:
        raise DomainError("greedy approximation needs at least two rows")
    chosen = 0
    for _, _, mask in pair_difference_masks(m):
        if not mask & chosen:
            chosen |= mask
    return Solution(tuple(mask_to_columns(chosen)))


def g_bound(h: int, k: int) -> int:
    """Size bound H! * H^(H+1) * (k+1)^H of the H-Hitting-Set kernel."""
    return factorial(h) * h ** (h + 1) * (k + 1) ** h


def _find_sunflower(
    family: list[frozenset[int]], petals: int
) -> tuple[frozenset[int], list[frozenset[int]]] | None:
    """A sunflower with ``petals`` petals inside ``family``, as (core, members).

    Follows the Erdos-Rado argument: a large pairwise disjoint subfamily is a
    sunflower with empty core; otherwise some element of its union lies in
    many sets and the search recurses on those sets with it removed. Finds
    one whenever ``|family| > s! * (petals-1)^s`` for sets of size at most s.
    """
    disjoint: list[frozenset[int]] = []
    used: set[int] = set()
    for s in family:
        if s and not s & used:
            disjoint.append(s)
            used |= s
            if len(disjoint) == petals:
                return frozenset(), disjoint
    if not used:
        return None
    counts = Counter(u for s in family for u in s if u in used)
    pivot = min(counts, key=lambda u: (-counts[u], u))
    if counts[pivot] < petals:
        return None
    sub = [s - {pivot} for s in family if pivot in s]
    found = _find_sunflower(sub, petals)
    if found is None:
        return None
    core, members = found
    return core | {pivot}, [s | {pivot} for s in members]


def _minimal(sets) -> list[frozenset[int]]:
    """Drop duplicates and strict supersets; ordered by size, then content."""
    unique = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset[int]] = []
    for s in unique:
        if not any(t <= s for t in kept):
            kept.append(s)
    return kept


def hs_kernelize(hs: HittingSetInstance) -> HittingSetInstance | None:
    """Sunflower kernel for Hitting Set with sets of size at most H.

    Any k+1 sets forming a sunflower force a hit on their core, so they are
    replaced by the core (an empty core cannot be hit: definite no, returned
    as ``None``). Elements left in no set are dropped and the rest renamed in
    their original order.
    """
    if any(not s for s in hs.sets):
        return None
    h = hs.max_card
    family = _minimal(hs.sets)
    while True:
        found = _find_sunflower(family, hs.k + 1)
        if found is None:
            break
        core, members = found
        if not core:
            return None
        drop = set(members)
        family = _minimal([s for s in family if s not in drop] + [core])
    elements = sorted(set().union(*family)) if family else []
    rename = {u: i for i, u in enumerate(elements, start=1)}
    sets = tuple(frozenset(rename[u] for u in s) for s in family)
    labels = tuple(hs.labels[u - 1] for u in elements)
    out = HittingSetInstance(len(elements), sets, hs.k, labels)
    if h:
        bound = g_bound(h, hs.k)
        if len(out.sets) > bound or out.universe_size > bound:
            raise ContractError(
                f"kernel of size ({len(out.sets)} sets, {out.universe_size} elements) "
                f"exceeds g({h},{hs.k}) = {bound}"
            )
    return out


def trivial_no_instance(k: int) -> Instance:
    """k+1 unit rows plus a null row: every one of the k+1 columns is needed."""
    rows = [tuple(1 if j == i else 0 for j in range(k + 1)) for i in range(k + 1)]
    rows.append((0,) * (k + 1))
    return Instance(Matrix(tuple(rows)), k)


def kernelize_h_k(inst: Instance) -> Instance:
    """Kernel through Hitting Set: reduce, shrink by sunflowers, map back."""
    m = inst.matrix
    if m.n < 2:
        raise DomainError("kernelization needs at least two rows")
    hs = dv_to_hitting_set(inst)
    kernel = hs_kernelize(hs)
    if kernel is None:
        return trivial_no_instance(inst.k)
    out = hitting_set_to_dv(kernel)
    h = distance_profile(m).max_distance
    if out.matrix.n > 1 and distance_profile(out.matrix).max_distance > 2 * h:
        raise ContractError("kernel output exceeds twice the input maximum distance")
    return out


# -- file format -------------------------------------------------------------


def parse_hs(text: str, k: int = 0) -> HittingSetInstance:
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, tok) for no, tok in lines if tok]
    if not lines:
        raise MatrixParseError("empty hitting set file")
    no, head = lines[0]
    try:
        universe, count = (int(x) for x in head)
    except ValueError:
        raise MatrixParseError("header must be '|U| |C|'", no) from None
    body = lines[1:]
    if len(body) != count:
        raise MatrixParseError(f"header announces {count} sets, found {len(body)}", no)
    sets = []
    for no, tok in body:
        try:
            sets.append(frozenset(int(x) for x in tok))
        except ValueError:
            raise MatrixParseError("set elements must be integers", no) from None
    try:
        return HittingSetInstance(universe, tuple(sets), k)
    except DomainError as exc:
        raise MatrixParseError(str(exc)) from None


def format_hs(hs: HittingSetInstance) -> str:
    lines = [f"{hs.universe_size} {len(hs.sets)}"]
    lines += [" ".join(str(u) for u in sorted(s)) for s in hs.sets]
    return "\n".join(lines) + "\n"


def load_hs(path: str | os.PathLike, k: int = 0) -> HittingSetInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_hs(fh.read(), k)


def save_hs(hs: HittingSetInstance, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_hs(hs))
