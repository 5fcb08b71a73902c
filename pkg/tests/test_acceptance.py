"""Acceptance suite: one check per criterion, each printing a single PASS/FAIL line.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import combinations
from math import factorial
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from distinct_vectors import (  # noqa: E402
    Graph,
    HittingSetInstance,
    Instance,
    RefusalError,
    SetFamily,
    classify,
    deza_threshold,
    distance_profile,
    dominance_reduce,
    dv_to_hitting_set,
    from_graph_d3is,
    g_bound,
    gen_random_profile,
    greedy_factor_h,
    hitting_set_to_dv,
    hs_kernelize,
    is_distinguishing,
    kernelize_h_k,
    kernelize_sigma_k,
    max_distance3_independent_set,
    minimum_solution_oracle,
    pad_case1,
    pad_case2,
    solve_poly_homogeneous,
    solve_sunflower,
    sunflower_core,
    weak_delta_lambda,
)
from distinct_vectors.generators import random_graph  # noqa: E402
from distinct_vectors.matrix import DistanceProfile, column_system  # noqa: E402
from distinct_vectors.reductions import (  # noqa: E402
    apply_rule_inessential,
    preprocess_binary,
)
from support import (  # noqa: E402
    SUNFLOWER_ROWS,
    FIVE_SETS,
    GAP_TWO,
    ilp_minimum,
    matching_instance,
    odd_gap_one,
    reduced_in_regime,
    small_binary,
    small_matrix,
)

RESULTS: list[str] = []


def record(number: int, passed: bool, detail: str) -> bool:
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}"
    RESULTS.append(line)
    print(line)
    return passed


def optimum(m, **limits) -> int:
    return len(minimum_solution_oracle(m, **limits))


def min_hitting_set(hs: HittingSetInstance) -> int:
    for size in range(hs.universe_size + 1):
        for cand in combinations(range(1, hs.universe_size + 1), size):
            if hs.is_hitting_set(cand):
                return size
    raise AssertionError("unhittable family")


def regime_corpus(pairs, count, seed0, max_rows=9, max_cols=12):
    """Seeded binary matrices with the given profiles whose reduction stays in the regime."""
    rng = random.Random(seed0)
    found, seed = [], seed0
    while len(found) < count:
        seed += 1
        alpha, beta = pairs[seed % len(pairs)]
        n = rng.randint(3, max_rows)
        d = rng.randint(beta, max_cols)
        m = gen_random_profile(n, d, alpha, beta, seed, attempts=20)
        if m is not None and reduced_in_regime(m):
            found.append(m)
    return found


# -- 1 -------------------------------------------------------------------------


def criterion_1() -> bool:
    bad = []
    for h in range(1, 11):
        for H in range(h, 11):
            expected = H <= 2 * ((h + 1) // 2) + 1
            if classify(DistanceProfile(h, H), 2).polynomial != expected:
                bad.append((h, H))
    spots = {(2, 3): True, (2, 4): False, (3, 5): True, (3, 6): False}
    for (h, H), poly in spots.items():
        if classify(DistanceProfile(h, H), 2).polynomial != poly:
            bad.append((h, H))
    return record(1, not bad, f"55 grid cells + 4 spot cells, mismatches: {bad or 'none'}")


# -- 2 -------------------------------------------------------------------------


def criterion_2() -> bool:
    pairs = [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (4, 5)]
    corpus = regime_corpus(pairs, 210, 20_000)
    mismatches, solver_time = 0, 0.0
    for m in corpus:
        start = time.perf_counter()
        sol = solve_poly_homogeneous(Instance(m, m.d))
        solver_time += time.perf_counter() - start
        if sol is None or not is_distinguishing(m, sol) or len(sol) != optimum(m):
            mismatches += 1
    ok = mismatches == 0 and solver_time < 20 and len(corpus) >= 200
    return record(
        2, ok, f"{len(corpus)} instances, {mismatches} mismatches, solver time {solver_time:.2f} s"
    )


# -- 3 -------------------------------------------------------------------------


def criterion_3() -> bool:
    checked, mismatches = 0, []
    gap_two = solve_poly_homogeneous(Instance(GAP_TWO, GAP_TWO.d))
    gap_two_ok = len(gap_two) == 5 == optimum(GAP_TWO) and is_distinguishing(GAP_TWO, gap_two)
    checked += 1
    for m in regime_corpus([(1, 3), (3, 5)], 60, 30_000, max_rows=9, max_cols=12):
        checked += 1
        if len(solve_poly_homogeneous(Instance(m, m.d))) != optimum(m):
            mismatches.append("random")
    structured = 0
    for seed in range(400):
        if structured == 45:
            break
        m = odd_gap_one(seed, 10 + seed % 25)
        if m is None or distance_profile(m).as_tuple() != (1, 3) or not reduced_in_regime(m):
            continue
        structured += 1
        checked += 1
        if len(solve_poly_homogeneous(Instance(m, m.d))) != ilp_minimum(m):
            mismatches.append(f"structured seed {seed}")
    m = matching_instance(3, 22, 0)
    checked += 1
    if len(solve_poly_homogeneous(Instance(m, m.d))) != ilp_minimum(m):
        mismatches.append("matching")
    ok = gap_two_ok and not mismatches and checked >= 100
    return record(
        3, ok,
        f"{checked} instances (fixture answer {len(gap_two)}), mismatches: {mismatches or 'none'}",
    )


# -- 4 -------------------------------------------------------------------------


def criterion_4() -> bool:
    failures, count = [], 0
    for seed in range(240):
        binary = seed % 2 == 0
        m = small_binary(seed, 8, 10) if binary else small_matrix(seed, 8, 10, 3)
        base = optimum(m)
        rules = [("dominance", dominance_reduce)]
        if m.is_binary:
            rules = [("preprocess", lambda x: preprocess_binary(x)[0]),
                     ("inessential", apply_rule_inessential)] + rules
        count += 1
        for name, rule in rules:
            out = rule(m)
            best = optimum(out)
            if any((best <= k) != (base <= k) for k in range(m.d + 1)):
                failures.append((seed, name, "answer"))
            if rule(out) != out:
                failures.append((seed, name, "idempotence"))
    return record(4, not failures and count >= 200,
                  f"{count} instances, failures: {failures[:5] or 'none'}")


# -- 5 -------------------------------------------------------------------------


def criterion_5() -> bool:
    failures = []
    if g_bound(2, 1) != 64:
        failures.append("g(2,1)")
    for seed in range(120):
        m = small_matrix(5000 + seed, 7, 9, 3) if seed % 2 else small_binary(5000 + seed, 7, 9)
        q = len(m.alphabet)
        base = optimum(m)
        H = distance_profile(m).max_distance
        for k in {max(base - 1, 0), base, base + 1}:
            out = kernelize_sigma_k(Instance(m, k))
            if out is None:
                if base <= k:
                    failures.append((seed, k, "sigma-k said no"))
            else:
                km = out.matrix
                if km.n > q**k or km.d > q**km.n / factorial(q):
                    failures.append((seed, k, "sigma-k size"))
                if (optimum(km) <= k) != (base <= k):
                    failures.append((seed, k, "sigma-k answer"))
            hs = hs_kernelize(dv_to_hitting_set(Instance(m, k)))
            if hs is not None:
                bound = g_bound(H, k)
                if len(hs.sets) > bound or hs.universe_size > bound:
                    failures.append((seed, k, "g bound"))
            kernel = kernelize_h_k(Instance(m, k))
            km = kernel.matrix
            if km.n > 1 and distance_profile(km).max_distance > 2 * H:
                failures.append((seed, k, "H'"))
            if (optimum(km, max_rows=40, max_cols=16) <= k) != (base <= k):
                failures.append((seed, k, "h-k answer"))
    return record(5, not failures, f"120 instances x 3 budgets, failures: {failures[:5] or 'none'}")


# -- 6 -------------------------------------------------------------------------


def criterion_6() -> bool:
    ratios, violations = [], 0
    for seed in range(300):
        m = small_matrix(7000 + seed, 8, 10, 3) if seed % 2 else small_binary(7000 + seed, 8, 10)
        sol = greedy_factor_h(Instance(m, m.d))
        best = optimum(m)
        H = distance_profile(m).max_distance
        if not is_distinguishing(m, sol) or len(sol) > H * best:
            violations += 1
        ratios.append(len(sol) / best)
    mean = sum(ratios) / len(ratios)
    return record(
        6, violations == 0,
        f"{len(ratios)} instances, {violations} violations, ratio mean {mean:.3f} max {max(ratios):.3f}",
    )


# -- 7 -------------------------------------------------------------------------


def criterion_7() -> bool:
    failures = []
    five_sets = HittingSetInstance(6, FIVE_SETS, 2)
    image = hitting_set_to_dv(five_sets)
    if not (five_sets.is_hitting_set({3, 5}) and is_distinguishing(image.matrix, [3, 5])
            and image.k == 2 and optimum(image.matrix) == min_hitting_set(five_sets) == 2):
        failures.append("fixture")
    for seed in range(150):
        m = small_matrix(9000 + seed, 8, 10, 3)
        if min_hitting_set(dv_to_hitting_set(Instance(m, 0))) != optimum(m):
            failures.append(("dv->hs", seed))
        rng = random.Random(seed)
        universe = rng.randint(1, 10)
        sets = [frozenset(rng.sample(range(1, universe + 1), rng.randint(1, min(4, universe))))
                for _ in range(rng.randint(1, 7))]
        hs = HittingSetInstance(universe, sets, 0)
        if optimum(hitting_set_to_dv(hs).matrix) != min_hitting_set(hs):
            failures.append(("hs->dv", seed))
    return record(7, not failures, f"fixture + 2 x 150 instances, failures: {failures[:5] or 'none'}")


# -- 8 -------------------------------------------------------------------------


def criterion_8() -> bool:
    failures, graphs, seed = [], 0, 0
    bases = []
    while graphs < 60:
        seed += 1
        g = random_graph(4 + seed % 5, 0.25 + 0.05 * (seed % 6), seed)
        try:
            inst = from_graph_d3is(g, 1)
        except RefusalError:
            continue
        graphs += 1
        best = max_distance3_independent_set(g)
        if distance_profile(inst.matrix).as_tuple() != (2, 4):
            failures.append(("profile", seed))
        if optimum(inst.matrix, max_rows=40) != g.vertex_count - best:
            failures.append(("equivalence", seed))
        if len(bases) < 3 and g.vertex_count <= 6:
            bases.append(from_graph_d3is(g, best))
    bases.append(from_graph_d3is(Graph(6, tuple((i, i + 1) for i in range(1, 6))), 2))
    for base in bases:
        best = optimum(base.matrix, max_rows=40)
        yes = best <= base.k
        for a in range(4):
            for b in range(4):
                p2 = pad_case2(base, a, b)
                if distance_profile(p2.matrix).as_tuple() != (2 + a, 4 + 2 * ((a + 1) // 2) + b):
                    failures.append(("pad2 profile", a, b))
                if (optimum(p2.matrix, max_rows=40, max_cols=60) <= p2.k) != yes:
                    failures.append(("pad2 answer", a, b))
        for b in range(4):
            p1 = pad_case1(base, b)
            if distance_profile(p1.matrix).as_tuple() != (1, 4 + b):
                failures.append(("pad1 profile", b))
            if (optimum(p1.matrix, max_rows=40) <= p1.k) != yes:
                failures.append(("pad1 answer", b))
    return record(
        8, not failures and graphs >= 50,
        f"{graphs} graphs, {len(bases)} padded bases, failures: {failures[:5] or 'none'}",
    )


# -- 9 -------------------------------------------------------------------------


def criterion_9() -> bool:
    failures = []
    flower = sunflower_core(column_system(SUNFLOWER_ROWS, range(1, 7)))
    petals = [{4, 9}, {7}, {3, 10}, {6, 8}, {5}, set()]
    if flower is None or flower.core != {1, 2} or [set(p) for p in flower.petals] != petals:
        failures.append("fixture core")
    if len(solve_sunflower(SUNFLOWER_ROWS)) != 6:
        failures.append("fixture size")
    rng = random.Random(99)
    sampled = 0
    for s in range(1, 5):
        c = deza_threshold(s)
        for _ in range(40):
            lam = rng.randint(0, s - 1)
            universe = rng.randint(s + 1, s * c)
            core = rng.sample(range(1, universe + 1), lam)
            rest = [x for x in range(1, universe + 1) if x not in core]
            fam: list[frozenset[int]] = []
            for _ in range(800):
                if rng.random() < 0.5:
                    cand = frozenset(core + rng.sample(rest, s - lam))
                else:
                    cand = frozenset(rng.sample(range(1, universe + 1), s))
                if cand not in fam and all(len(cand & f) == lam for f in fam):
                    fam.append(cand)
            for size in range(c, len(fam) + 1):
                sub = SetFamily(fam[:size])
                sampled += 1
                if weak_delta_lambda(sub) != lam or sunflower_core(sub) is None:
                    failures.append(("deza", s, size))
    ok = not failures and sampled > 0
    return record(9, ok, f"fixture + {sampled} sampled systems, failures: {failures[:5] or 'none'}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_acceptance(check):
    start = time.perf_counter()
    assert check()
    assert time.perf_counter() - start < 60


if __name__ == "__main__":
    outcomes = [check() for check in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
