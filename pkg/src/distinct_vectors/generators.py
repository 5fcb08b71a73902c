"""Instance constructions with prescribed distance profiles."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError, MatrixParseError, RefusalError
from .matrix import Instance, Matrix, distance_profile, hamming

RNG_ALGORITHM = "mt19937-random53"


class StableRandom:
    """Seeded source built only on ``random.Random.random``.

    Python guarantees that method's output sequence for a given seed across
    versions; integers and shuffles are derived from it here instead of
    relying on ``randrange`` or ``shuffle``, whose algorithms may change.
    """

    algorithm = RNG_ALGORITHM

    def __init__(self, seed: int):
        self._rng = random.Random(seed)

    def random(self) -> float:
        return self._rng.random()

    def below(self, n: int) -> int:
        if n <= 0:
            raise DomainError("upper bound must be positive")
        return min(int(self._rng.random() * n), n - 1)

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def shuffled(self, items) -> list:
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.below(i + 1)
            out[i], out[j] = out[j], out[i]
        return out

    def sample(self, items, count: int) -> list:
        return self.shuffled(items)[:count]


# -- graphs ------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise DomainError("vertex count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 1 <= x <= self.vertex_count:
                    raise DomainError(f"vertex {x} outside [1, {self.vertex_count}]")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise DomainError(f"repeated edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def neighbours(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def isolated(self) -> list[int]:
        return [v for v, nb in self.neighbours().items() if not nb]


def parse_graph(text: str) -> Graph:
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), start=1)]
    lines = [(no, tok) for no, tok in lines if tok]
    if not lines:
        raise MatrixParseError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0][1])
        edges = []
        for no, tok in lines[1:]:
            u, v = (int(x) for x in tok)
            edges.append((u, v))
    except ValueError:
        raise MatrixParseError("graph lines must hold exactly two integers") from None
    if len(edges) != m:
        raise MatrixParseError(f"header announces {m} edges, found {len(edges)}", lines[0][0])
    try:
        return Graph(n, tuple(edges))
    except DomainError as exc:
        raise MatrixParseError(str(exc)) from None


def format_graph(g: Graph) -> str:
    return "\n".join([f"{g.vertex_count} {len(g.edges)}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def load_graph(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = StableRandom(seed)
    edges = tuple(e for e in combinations(range(1, n + 1), 2) if rng.random() < p)
    return Graph(n, edges)


def graph_distances(g: Graph) -> dict[int, dict[int, int]]:
    adj = g.neighbours()
    dist = {}
    for s in adj:
        seen = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if v not in seen:
                        seen[v] = seen[u] + 1
                        nxt.append(v)
            frontier = nxt
        dist[s] = seen
    return dist


def max_distance3_independent_set(g: Graph) -> int:
    """Largest vertex set with pairwise graph distance at least 3 (brute force)."""
    dist = graph_distances(g)
    far = {u: {v for v in dist if v != u and dist[u].get(v, 3) >= 3} for u in dist}
    best = 0

    def grow(chosen: int, candidates: list[int]) -> None:
        nonlocal best
        best = max(best, chosen)
        for idx, v in enumerate(candidates):
            if chosen + len(candidates) - idx <= best:
                return
            grow(chosen + 1, [w for w in candidates[idx + 1 :] if w in far[v]])

    grow(0, sorted(dist))
    return best


def _has_disjoint_edges(g: Graph) -> bool:
    return any(not set(e) & set(f) for e, f in combinations(g.edges, 2))


def from_graph_d3is(g: Graph, k: int, strict: bool = True) -> Instance:
    """Edge-vertex incidence rows plus a null row, with budget n - k.

    The graph has a distance-3 independent set of size k iff the matrix has
    a distinguishing set of n - k columns. With ``strict`` the degenerate
    graphs the construction does not cover are refused; the refusal carries
    the answer when it can be decided directly.
    """
    n = g.vertex_count
    if k < 0:
        raise DomainError("k must be non-negative")
    if strict:
        if g.isolated():
            raise RefusalError("graph has isolated vertices", verdict=None)
        if k > n:
            raise RefusalError(f"no vertex set of size {k} in a graph on {n} vertices", verdict=False)
        if not _has_disjoint_edges(g):
            # star or triangle: every two vertices are within distance 2
            raise RefusalError("graph has no two disjoint edges", verdict=k <= 1)
        if len(g.edges) < 4:
            raise RefusalError(
                "graph has fewer than four edges",
                verdict=max_distance3_independent_set(g) >= k,
            )
    elif k > n:
        raise DomainError(f"k = {k} exceeds the vertex count {n}")
    rows = [tuple(1 if v in e else 0 for v in range(1, n + 1)) for e in g.edges]
    rows.append((0,) * n)
    return Instance(Matrix(tuple(rows)), n - k)


# -- padding -----------------------------------------------------------------


def _padding_layout(inst: Instance) -> tuple[int, int]:
    """(null row, pivot row) of an edge-incidence shaped instance, 0-based."""
    m = inst.matrix
    if not m.is_binary or m.n < 3:
        raise DomainError("padding needs a binary matrix with at least three rows")
    nulls = [i for i, r in enumerate(m.rows) if not any(r)]
    if not nulls:
        raise DomainError("padding needs a null row")
    null = nulls[0]
    if any(sum(r) != 2 for i, r in enumerate(m.rows) if i != null):
        raise DomainError("padding needs every non-null row to have weight 2")
    if distance_profile(m).as_tuple() != (2, 4):
        raise DomainError("padding needs the distance profile (2, 4)")
    for i, r in enumerate(m.rows):
        if i != null and any(hamming(r, o) == 4 for o in m.rows):
            return null, i
    raise DomainError("no pair of rows at distance 4")


def pad_case1(inst: Instance, b: int) -> Instance:
    """Profile (1, 4+b): b indicator columns of the pivot row, then a new row.

    The new row equals the null row except for one extra column, which every
    solution must therefore keep; the budget grows by one.
    """
    if b < 0:
        raise DomainError("b must be non-negative")
    _, pivot = _padding_layout(inst)
    m = inst.matrix
    rows = []
    for i, r in enumerate(m.rows):
        rows.append(r + (1 if i == pivot else 0,) * b + (0,))
    rows.append((0,) * (m.d + b) + (1,))
    return Instance(Matrix(tuple(rows)), inst.k + 1)


def pad_case2(inst: Instance, a: int, b: int) -> Instance:
    """Profile (2+a, 4+2*ceil(a/2)+b) by appending inessential columns.

    Per non-null row, ceil(a/2) copies of its indicator column; then
    floor(a/2) copies of the indicator of all non-null rows; then b copies
    of the pivot row's indicator.
    """
    if a < 0 or b < 0:
        raise DomainError("a and b must be non-negative")
    null, pivot = _padding_layout(inst)
    m = inst.matrix
    columns = [m.column(j) for j in range(1, m.d + 1)]
    for i in range(m.n):
        if i == null:
            continue
        unit = tuple(1 if x == i else 0 for x in range(m.n))
        columns.extend([unit] * ((a + 1) // 2))
    columns.extend([tuple(0 if x == null else 1 for x in range(m.n))] * (a // 2))
    columns.extend([tuple(1 if x == pivot else 0 for x in range(m.n))] * b)
    return Instance(Matrix.from_columns(columns, m.n), inst.k)


# -- sunflowers and random profiles -------------------------------------------


def gen_sunflower(petal_sizes, core_size: int, seed: int = 0) -> Matrix:
    """Rows ``core | petal`` for each petal, then a null row; columns shuffled by seed.

    Columns inside the core, or inside one petal, are necessarily equal.
    """
    petal_sizes = list(petal_sizes)
    if core_size < 0 or any(p < 0 for p in petal_sizes):
        raise DomainError("sizes must be non-negative")
    empty = sum(1 for p in petal_sizes if p == 0)
    if empty > 1:
        raise DomainError("at most one petal may be empty (rows would coincide)")
    if empty and core_size == 0:
        raise DomainError("an empty petal around an empty core equals the null row")
    d = core_size + sum(petal_sizes)
    order = StableRandom(seed).shuffled(range(d))
    core = set(order[:core_size])
    rows = []
    start = core_size
    for p in petal_sizes:
        ones = core | set(order[start : start + p])
        start += p
        rows.append(tuple(1 if j in ones else 0 for j in range(d)))
    rows.append((0,) * d)
    return Matrix(tuple(rows))


def gen_random_profile(
    n: int, d: int, alpha: int, beta: int, seed: int, attempts: int = 200
) -> Matrix | None:
    """Binary n x d matrix with distance profile exactly (alpha, beta), or None.

    Each attempt grows the matrix row by row: a candidate flips between alpha
    and beta random bits of the first row and is kept if its distance to every
    row so far stays in range.
    """
    if n < 2:
        raise DomainError("a distance profile needs at least two rows")
    if not 1 <= alpha <= beta <= d:
        raise DomainError(f"need 1 <= alpha <= beta <= d, got {alpha}, {beta}, {d}")
    if n == 2:
        if alpha != beta:
            return None
        return Matrix(((0,) * d, (1,) * alpha + (0,) * (d - alpha)))
    rng = StableRandom(seed)
    for _ in range(attempts):
        rows = [tuple(rng.below(2) for _ in range(d))]
        for _ in range(50 * n):
            if len(rows) == n:
                break
            cand = list(rows[0])
            for j in rng.sample(range(d), rng.between(alpha, beta)):
                cand[j] ^= 1
            cand = tuple(cand)
            if cand in rows:
                continue
            if all(alpha <= hamming(cand, r) <= beta for r in rows):
                rows.append(cand)
        if len(rows) < n:
            continue
        m = Matrix(tuple(rows))
        if distance_profile(m).as_tuple() == (alpha, beta):
            return m
    return None
