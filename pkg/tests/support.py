"""Shared helpers for the test suite: ILP oracle and structured instances."""

from __future__ import annotations

import random
from itertools import combinations

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from distinct_vectors import Matrix, distance_profile
from distinct_vectors.reductions import inessential_reduction, preprocess_binary
from distinct_vectors.solvers.homogeneous import in_polynomial_regime


def ilp_minimum(m: Matrix) -> int:
    """Minimum distinguishing set size via an integer program (independent oracle)."""
    if m.n < 2:
        return 0
    diffs = {
        tuple(j for j in range(m.d) if a[j] != b[j]) for a, b in combinations(m.rows, 2)
    }
    # a column set hitting every minimal difference set hits them all
    minimal = [s for s in diffs if not any(set(t) < set(s) for t in diffs)]
    A = np.zeros((len(minimal), m.d))
    for r, cols in enumerate(sorted(minimal)):
        A[r, list(cols)] = 1
    res = milp(
        c=np.ones(m.d),
        constraints=LinearConstraint(A, lb=1, ub=np.inf),
        integrality=np.ones(m.d),
        bounds=Bounds(0, 1),
    )
    assert res.success, res.message
    return int(round(res.fun))


def reduced_in_regime(m: Matrix) -> bool:
    """Whether the polynomial solver's precondition holds after reduction."""
    red, _ = inessential_reduction(preprocess_binary(m)[0])
    return red.n < 2 or in_polynomial_regime(distance_profile(red))


def sets_to_matrix(sets, d: int | None = None, null: bool = True) -> Matrix:
    d = d if d is not None else max((max(s) for s in sets if s), default=0)
    rows = [tuple(1 if j in s else 0 for j in range(1, d + 1)) for s in sets]
    if null:
        rows.append((0,) * d)
    return Matrix(tuple(rows))


def odd_gap_one(seed: int, size: int) -> Matrix | None:
    """Random (1,3)-profile matrix with large sunflower-shaped weight classes.

    Rows are drawn from templates (singletons, pairs through a centre,
    triples through a two-element core, arbitrary small sets) and kept
    greedily while every pairwise distance stays within [1, 3].
    """
    rng = random.Random(seed)
    universe = rng.randint(size, 2 * size)
    centre = rng.choice([1, 2])
    core = {1, rng.choice([2, 3])}
    weights = [rng.random() for _ in range(4)]
    pool = []
    for _ in range(40 * size):
        kind = rng.choices(range(4), weights)[0]
        if kind == 0:
            s = {rng.randint(1, universe)}
        elif kind == 1:
            s = {centre, rng.randint(1, universe)}
        elif kind == 2:
            s = core | {rng.randint(1, universe)}
        else:
            s = set(rng.sample(range(1, universe + 1), rng.randint(1, 3)))
        pool.append(frozenset(s))
    rows: list[frozenset] = []
    for s in pool:
        if len(rows) == size:
            break
        if not s or s in rows:
            continue
        if all(1 <= len(s ^ r) <= 3 for r in rows) and 1 <= len(s) <= 3:
            rows.append(s)
    if len(rows) < 3:
        return None
    m = sets_to_matrix(rows, universe)
    # drop all-zero columns so generated instances carry no dead columns
    keep = [j for j in range(1, m.d + 1) if any(m.column(j))]
    return m.select_columns(keep)


def matching_instance(alpha: int, heavy: int, seed: int) -> Matrix:
    """Odd alpha, profile (alpha, alpha+2), shaped so the matching case applies.

    Rows of weight alpha+1 (left side) and of weights alpha+2 and alpha
    (right side) are joined by two-row edge columns of a random simple
    bipartite graph; a core C, a separator column z and the null row
    complete the matrix.
    """
    if alpha % 2 == 0 or alpha < 3:
        raise ValueError("alpha must be odd and at least 3")
    h = (alpha + 1) // 2
    light = h
    middle = heavy + h - 1
    rng = random.Random(seed)
    left = [("m", i) for i in range(middle)]
    right_stubs = [("t", i) for i in range(heavy) for _ in range(h)]
    right_stubs += [("l", t) for t in range(light) for _ in range(h - 1)]
    left_stubs = [u for u in left for _ in range(h)]
    assert len(left_stubs) == len(right_stubs)
    for _ in range(10_000):
        rng.shuffle(right_stubs)
        edges = list(zip(left_stubs, right_stubs))
        if len(set(edges)) == len(edges):
            break
    else:
        raise RuntimeError("no simple bipartite graph found")
    core = list(range(1, h + 1))
    z = h + 1
    sets: dict = {}
    for i in range(middle):
        sets[("m", i)] = set(core)
    for i in range(heavy):
        sets[("t", i)] = set(core) | {z}
    for t in range(light):
        sets[("l", t)] = (set(core) - {core[t]}) | {z}
    for col, (u, v) in enumerate(edges, start=z + 1):
        sets[u].add(col)
        sets[v].add(col)
    order = list(sets)
    rng.shuffle(order)
    return sets_to_matrix([sets[key] for key in order], z + len(edges))


def small_binary(seed: int, max_rows: int = 8, max_cols: int = 10) -> Matrix:
    """Random binary matrix with distinct rows, sized for the brute-force oracle."""
    rng = random.Random(seed)
    d = rng.randint(1, max_cols)
    n = rng.randint(2, min(max_rows, 2**d))
    rows: set = set()
    while len(rows) < n:
        rows.add(tuple(rng.randint(0, 1) for _ in range(d)))
    return Matrix(tuple(sorted(rows, key=lambda r: rng.random())))


def small_matrix(seed: int, max_rows: int = 8, max_cols: int = 10, max_sigma: int = 3) -> Matrix:
    """Random matrix over up to ``max_sigma`` symbols with distinct rows."""
    rng = random.Random(seed)
    q = rng.randint(2, max_sigma)
    d = rng.randint(1, max_cols)
    n = rng.randint(2, min(max_rows, q**d))
    rows: set = set()
    while len(rows) < n:
        rows.add(tuple(rng.randint(0, q - 1) for _ in range(d)))
    return Matrix(tuple(sorted(rows, key=lambda r: rng.random())))


# Worked examples, written as the sets of 1-columns of each row.
MIXED_WEIGHTS = sets_to_matrix([{1, 5}, {1, 4, 7}, {3}, {2, 4, 5}, {6, 7}], 7, null=False)
SUNFLOWER_ROWS = sets_to_matrix([{1, 2, 4, 9}, {1, 2, 7}, {1, 2, 3, 10}, {1, 2, 6, 8}, {1, 2, 5}, {1, 2}], 10)
FIVE_SETS = [{1, 2, 3}, {3, 4}, {1, 3, 6}, {1, 2, 4, 5}, {1, 5, 6}]
GAP_TWO = sets_to_matrix(
    [
        {1, 2, 3, 4, 5},
        {1, 2, 3, 6, 7},
        {1, 2, 3, 8, 9},
        {1, 2, 4, 7},
        {1, 2, 5, 9},
        {1, 2, 8, 10},
        {1, 2, 6, 11},
        {2, 3, 10},
        {1, 3, 11},
    ],
    11,
)
