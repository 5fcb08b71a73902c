"""Left-saturating bipartite matching by augmenting paths."""

from __future__ import annotations

from typing import Hashable, Iterable


def hall_matching(
    left: Iterable[Hashable],
    right: Iterable[Hashable],
    edges: Iterable[tuple[Hashable, Hashable]],
) -> dict | None:
    """Matching that covers every left vertex, or None if Hall's condition fails.

    Returns a dict left -> right. Vertices and neighbours are visited in
    sorted order so the result is deterministic.
    """
    left = sorted(set(left))
    right_set = set(right)
    adj: dict = {u: [] for u in left}
    for u, v in edges:
        if u not in adj or v not in right_set:
            raise ValueError(f"edge {(u, v)!r} does not join left to right")
        adj[u].append(v)
    for u in adj:
        adj[u] = sorted(set(adj[u]))

    match_right: dict = {}

    def augment(u, seen: set) -> bool:
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in left:
        if not augment(u, set()):
            return None
    return {u: v for v, u in match_right.items()}
