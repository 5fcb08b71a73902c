"""Polynomial-time solver for binary matrices whose rows are nearly equidistant.

The solver first reduces the matrix (an all-zero row, no repeated columns, no
inessential columns). Row weights then equal distances to the zero row, and
every weight class of size at least the Deza constant is a sunflower. A case
split on which weight classes are that large leaves one of three outcomes:
a bounded instance, handled by exhaustive search; a closed-form answer; or an
O(n)/O(n^2) family of candidate solutions that is guaranteed to contain a
minimum one. Each structural fact the case split relies on is re-checked,
and a failure raises ``ContractError`` instead of producing a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from ..errors import ContractError, DomainError
from ..matrix import DistanceProfile, Instance, Matrix, Solution, distance_profile
from ..reductions import inessential_reduction, preprocess_binary
from ..sunflowers import SetFamily, Sunflower, deza_threshold, solve_sunflower, sunflower_core
from .exact import _projector, solve_exact_subsets
from .matching import hall_matching
from .regime import polynomial_bound


def ceil_half(x: int) -> int:
    return (x + 1) // 2


@dataclass(frozen=True)
class WeightClassAnalysis:
    profile: DistanceProfile
    null_row: int | None
    classes: dict[int, tuple[int, ...]]
    systems: dict[int, SetFamily]
    unions: dict[int, frozenset[int]]
    threshold_c: int | None

    @property
    def alpha(self) -> int:
        return self.profile.min_distance

    @property
    def beta(self) -> int:
        return self.profile.max_distance

    @property
    def counts(self) -> dict[int, int]:
        return {w: len(rows) for w, rows in self.classes.items()}

    def count(self, w: int) -> int:
        return len(self.classes.get(w, ()))

    def rows(self, w: int) -> tuple[int, ...]:
        return self.classes.get(w, ())

    def union(self, *weights: int) -> frozenset[int]:
        return frozenset().union(*(self.unions.get(w, frozenset()) for w in weights))


def _expected_intersections(alpha: int, beta: int) -> dict[tuple[int, int], tuple[str, set[int]]]:
    a = alpha
    if beta <= a + 1:
        return {
            (a, a): ("(1) equal-weight rows of weight h meet in floor(h/2) columns", {a // 2}),
            (a + 1, a + 1): (
                "(2) equal-weight rows of weight h+1 meet in ceil((h+1)/2) columns",
                {ceil_half(a + 1)},
            ),
            (a, a + 1): (
                "(3) rows of weight h and h+1 meet in floor((h+1)/2) columns",
                {(a + 1) // 2},
            ),
        }
    return {
        (a, a): ("(1) rows of weight h meet in floor(h/2) columns", {a // 2}),
        (a, a + 1): (
            "(2) rows of weight h and h+1 meet in floor(h/2) or ceil(h/2) columns",
            {a // 2, ceil_half(a)},
        ),
        (a, a + 2): ("(3) rows of weight h and h+2 meet in ceil(h/2) columns", {ceil_half(a)}),
        (a + 1, a + 1): ("(4) rows of weight h+1 meet in ceil(h/2) columns", {ceil_half(a)}),
        (a + 1, a + 2): (
            "(5) rows of weight h+1 and h+2 meet in ceil(h/2) or ceil(h/2)+1 columns",
            {ceil_half(a), ceil_half(a) + 1},
        ),
        (a + 2, a + 2): ("(6) rows of weight h+2 meet in ceil(h/2)+1 columns", {ceil_half(a) + 1}),
    }


def analyze_weight_classes(m: Matrix) -> WeightClassAnalysis:
    """Group non-null rows by weight and check the pairwise intersection sizes.

    For profiles with H <= h+1, or h odd and H = h+2, the intersection size
    of two rows depends only on their weights; a mismatch raises
    ``ContractError`` naming the violated property. Weights equal distances
    to the all-zero row, so without one the classes are reported unchecked.
    """
    m.require_binary()
    masks = m.row_masks
    profile = distance_profile(m)
    alpha, beta = profile.as_tuple()
    classes: dict[int, list[int]] = {}
    for i, r in enumerate(masks, start=1):
        if r:
            classes.setdefault(r.bit_count(), []).append(i)
    classes_t = {w: tuple(rows) for w, rows in sorted(classes.items())}
    systems = {w: SetFamily(m.ones(i) for i in rows) for w, rows in classes_t.items()}
    unions = {w: fam.union() for w, fam in systems.items()}

    threshold = None
    if beta <= alpha + 1:
        threshold = deza_threshold(alpha + 1)
    elif alpha % 2 == 1 and beta == alpha + 2:
        threshold = deza_threshold(alpha + 2)
    if threshold is not None and 0 in masks:
        expected = _expected_intersections(alpha, beta)
        for w in classes_t:
            if not alpha <= w <= beta:
                raise ContractError(f"row weight {w} outside [{alpha}, {beta}]")
        for (w1, w2), (name, sizes) in expected.items():
            for i in classes_t.get(w1, ()):
                for j in classes_t.get(w2, ()):
                    if (w1 == w2 and j <= i):
                        continue
                    inter = (masks[i - 1] & masks[j - 1]).bit_count()
                    if inter not in sizes:
                        raise ContractError(
                            f"property {name} violated by rows {i} and {j} ({inter})"
                        )
    return WeightClassAnalysis(
        profile=profile,
        null_row=masks.index(0) + 1 if 0 in masks else None,
        classes=classes_t,
        systems=systems,
        unions=unions,
        threshold_c=threshold,
    )


@dataclass
class PolyResult:
    solution: Solution | None
    minimum_size: int | None
    gap: int | None = None
    case: str = ""
    candidates: int = 0
    reduced_shape: tuple[int, int] = (0, 0)
    reduced_profile: tuple[int, int] | None = None
    notes: list[str] = field(default_factory=list)


def in_polynomial_regime(p: DistanceProfile) -> bool:
    return p.max_distance <= polynomial_bound(p.min_distance)


def _require_flower(a: WeightClassAnalysis, w: int, core_size: int) -> Sunflower:
    fam = a.systems.get(w)
    flower = sunflower_core(fam) if fam is not None and len(fam) >= 2 else None
    if flower is None:
        raise ContractError(f"weight-{w} rows exceed the Deza constant but form no sunflower")
    if len(flower.core) != core_size:
        raise ContractError(
            f"weight-{w} sunflower has core size {len(flower.core)}, expected {core_size}"
        )
    return flower


def _search_candidates(
    m: Matrix,
    forced: frozenset[int],
    free: frozenset[int],
    groups: list[frozenset[int]],
) -> tuple[Solution | None, int]:
    """Best distinguishing set among structured candidates.

    Candidates are ``forced | A | (G_1 - x_1) | ...`` for every subset ``A`` of
    ``free`` and every choice of at most one dropped column ``x_g`` per group.
    They are checked by size, then lexicographically. Returns the first
    distinguishing candidate (or None) and the number of candidates.
    """
    free = free - forced
    groups = [g - forced - free for g in groups]
    group_parts = {
        frozenset().union(*choice)
        for choice in product(*([g] + [g - {x} for x in sorted(g)] for g in groups))
    }
    smallest_part = min(len(p) for p in group_parts)
    free_list = sorted(free)
    distinct = _projector(m)
    best: tuple[int, list[int]] | None = None
    seen = 0
    # free columns are disjoint from forced and group columns, so a candidate
    # built from r free columns has size at least len(forced) + r + smallest_part
    for r in range(len(free_list) + 1):
        if best is not None and len(forced) + r + smallest_part > best[0]:
            break
        for sub in combinations(free_list, r):
            base = forced.union(sub)
            for part in group_parts:
                seen += 1
                cand = sorted(base | part)
                key = (len(cand), cand)
                if (best is None or key < best) and distinct(cand):
                    best = key
    if best is None:
        return None, seen
    return Solution(tuple(best[1])), seen


def _check_petals_touch_others(a: WeightClassAnalysis, flower: Sunflower, w: int) -> None:
    others = a.union(*(x for x in a.classes if x != w))
    for petal in flower.petals:
        if not petal & others:
            raise ContractError(
                f"a petal of the weight-{w} sunflower meets no other row: its columns "
                "would be inessential"
            )


def _every_column_forced(m: Matrix, cols: frozenset[int]) -> bool:
    """True if each column is the only difference of some pair of rows."""
    masks = m.row_masks
    singles = set()
    for i in range(m.n):
        for j in range(i + 1, m.n):
            diff = masks[i] ^ masks[j]
            if diff and diff & (diff - 1) == 0:
                singles.add(diff.bit_length())
    return cols <= singles


def _solve_gap_one(m: Matrix, a: WeightClassAnalysis, res: PolyResult) -> Solution:
    alpha = a.alpha
    c = a.threshold_c
    n_lo, n_hi = a.count(alpha), a.count(alpha + 1)
    if n_lo < c and n_hi < c:
        res.case = "bounded"
        return _delegate(m, res)
    if n_hi >= c:
        res.case = "heavy class is a sunflower"
        _require_flower(a, alpha + 1, ceil_half(alpha + 1))
        if alpha >= 2:
            raise ContractError("petal columns of the heavy class would be inessential")
        if n_lo != 1:
            raise ContractError(f"expected exactly one weight-1 row, found {n_lo}")
        cols = a.union(*a.classes)
        if not _every_column_forced(m, cols):
            raise ContractError("some column of the forced solution is not forced")
        res.candidates = 1
        return Solution(tuple(cols))
    res.case = "light class is a sunflower"
    _require_flower(a, alpha, alpha // 2)
    if alpha % 2 == 0:
        raise ContractError("core columns of the light class would be inessential")
    if n_hi != 0:
        raise ContractError("rows of weight h+1 coexist with a large weight-h sunflower")
    res.candidates = 1
    return solve_sunflower(m)


def _delegate(m: Matrix, res: PolyResult) -> Solution:
    sol = solve_exact_subsets(Instance(m, m.d))
    assert sol is not None
    return sol


def _large_label(big: tuple[bool, ...]) -> str:
    """Name a gap-two branch by the weight classes reaching the threshold."""
    names = [w for w, flag in zip(("h", "h+1", "h+2"), big) if flag]
    return "large " + ("/".join(names) if names else "none")


def _solve_odd_gap_two(m: Matrix, a: WeightClassAnalysis, res: PolyResult) -> Solution:
    alpha = a.alpha
    c = a.threshold_c
    big = tuple(a.count(alpha + x) >= c for x in range(3))
    res.case = _large_label(big)
    half_up = ceil_half(alpha)
    if not any(big):
        return _delegate(m, res)
    if big[0] and big[2]:
        raise ContractError(f"{res.case} cannot occur on a reduced instance")

    u1 = a.union(1)
    if sum(big) == 1:
        x = big.index(True)
        w = alpha + x
        core_size = (alpha // 2, half_up, half_up + 1)[x]
        flower = _require_flower(a, w, core_size)
        if alpha >= 3:
            _check_petals_touch_others(a, flower, w)
            return _delegate(m, res)
        if x == 0:
            free, groups = a.union(2, 3), []
        elif x == 1:
            free, groups = flower.core | a.union(3), [a.union(2) - flower.core]
        else:
            free, groups = flower.core | a.union(2), [a.union(3) - flower.core]
        sol, res.candidates = _search_candidates(m, u1, free, groups)
        return _expect(sol)

    if big[0] and big[1]:
        if a.count(alpha + 2):
            raise ContractError("rows of weight h+2 coexist with a large weight-h sunflower")
        _require_flower(a, alpha, alpha // 2)
        flower = _require_flower(a, alpha + 1, half_up)
        if alpha >= 3:
            raise ContractError("core columns of the weight-h sunflower would be inessential")
        sol, res.candidates = _search_candidates(
            m, u1, flower.core, [a.union(2) - flower.core]
        )
        return _expect(sol)

    # weights h+1 and h+2 both large
    mid = _require_flower(a, alpha + 1, half_up)
    top = _require_flower(a, alpha + 2, half_up + 1)
    if not mid.core < top.core:
        raise ContractError("core of the weight-(h+1) sunflower is not inside the weight-(h+2) core")
    if alpha == 1:
        sol, res.candidates = _search_candidates(
            m, u1, top.core, [a.union(2) - mid.core, a.union(3) - top.core]
        )
        return _expect(sol)
    return _solve_by_matching(m, a, mid, top, res)


def _expect(sol: Solution | None) -> Solution:
    if sol is None:
        raise ContractError("no candidate distinguishes all rows")
    return sol


def _solve_by_matching(
    m: Matrix, a: WeightClassAnalysis, mid: Sunflower, top: Sunflower, res: PolyResult
) -> Solution:
    alpha = a.alpha
    light, middle, heavy = a.rows(alpha), a.rows(alpha + 1), a.rows(alpha + 2)
    if len(light) != ceil_half(alpha):
        raise ContractError(f"expected {ceil_half(alpha)} rows of weight h, found {len(light)}")
    if len(middle) != len(heavy) + alpha // 2:
        raise ContractError("count identity n(h+1) = n(h+2) + floor(h/2) fails")
    (z,) = top.core - mid.core
    outer = frozenset(light) | frozenset(heavy)
    col_masks = m.column_masks
    z_rows = frozenset(i + 1 for i in range(m.n) if col_masks[z - 1] >> i & 1)
    if z_rows != outer:
        raise ContractError(f"column {z} is not the indicator of the weight-h and h+2 rows")
    middle_set = frozenset(middle)
    edges = {}
    for j in range(1, m.d + 1):
        if j in top.core:
            continue
        ones = [i + 1 for i in range(m.n) if col_masks[j - 1] >> i & 1]
        if not ones:
            continue
        if len(ones) != 2:
            raise ContractError(f"column {j} outside the core has {len(ones)} ones, expected 2")
        left = [i for i in ones if i in middle_set]
        right = [i for i in ones if i in outer]
        if len(left) != 1 or len(right) != 1:
            raise ContractError(f"column {j} does not join a weight-(h+1) row to the others")
        edges[(left[0], right[0])] = j
    matching = hall_matching(middle, outer, edges)
    if matching is None:
        raise ContractError("no matching saturates the weight-(h+1) rows")
    res.candidates = 1
    res.notes.append(f"matching on {len(middle)} rows plus column {z}")
    cols = frozenset(edges[(u, v)] for u, v in matching.items()) | {z}
    if not _projector(m)(sorted(cols)):
        raise ContractError("matching columns plus the separator do not distinguish all rows")
    return Solution(tuple(cols))


def solve_reduced(m: Matrix, k: int) -> PolyResult:
    """Case analysis on a matrix that is already fully reduced."""
    res = PolyResult(None, None, reduced_shape=(m.n, m.d))
    if m.n == 1:
        res.case = "single row"
        res.solution, res.minimum_size = Solution(), 0
        return res
    a = analyze_weight_classes(m)
    res.reduced_profile = a.profile.as_tuple()
    if a.beta <= a.alpha + 1:
        res.gap = a.beta - a.alpha
        best = _solve_gap_one(m, a, res)
    elif a.alpha % 2 == 1 and a.beta == a.alpha + 2:
        res.gap = 2
        best = _solve_odd_gap_two(m, a, res)
    else:
        raise DomainError(
            f"reduced profile (h={a.alpha}, H={a.beta}) is outside the polynomial "
            "regime; use an exact solver"
        )
    res.minimum_size = len(best)
    res.solution = best if len(best) <= k else None
    return res


def poly_homogeneous_run(inst: Instance) -> PolyResult:
    """Reduce, then solve by the case analysis; the regime is judged after reduction."""
    m = inst.matrix
    m.require_binary()
    pre, report = preprocess_binary(m)
    reduced, report2 = inessential_reduction(pre)
    report = report.then(report2)
    res = solve_reduced(reduced, inst.k)
    if res.solution is not None:
        res.solution = Solution(tuple(report.lift(res.solution)))
    return res


def solve_poly_homogeneous(inst: Instance) -> Solution | None:
    return poly_homogeneous_run(inst).solution
