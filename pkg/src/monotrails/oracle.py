"""Brute-force ground truth for longest strictly decreasing trails.

Plain depth-first search over decreasing extensions, no memoization and no
pruning beyond the definition itself, so it is slow (exponential; intended
for n up to ~9) but obviously correct -- the point is to differentially
test the label-propagation algorithm against it.  Because all weights are
distinct, extending only with strictly smaller weights already guarantees
the edges of a trail are pairwise distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidGraphError
from .graphs import WeightedGraph, validate
from .trails import Trail


class TrailEnumeration(NamedTuple):
    trails: list[Trail]
    truncated: bool


@dataclass
class EnumerationResult:
    per_vertex: list[int]
    optimum: int
    nodes_explored: int


def _adjacency(g: WeightedGraph) -> list[list[tuple[int, object]]]:
    """adj[u] = (neighbor, weight) pairs, neighbors ascending."""
    adj: list[list[tuple[int, object]]] = [[] for _ in range(g.n)]
    for (a, b), w in g.edges.items():
        adj[a].append((b, w))
        adj[b].append((a, w))
    for row in adj:
        row.sort()
    return adj


def enumerate_dec_trails_from(g: WeightedGraph, v: int, cap: int = 100_000) -> TrailEnumeration:
    """All maximal strictly decreasing trails starting at v.

    Maximal means not extendable by any smaller-weight edge, matching how
    one would list trails by hand (prefixes of listed trails are omitted).
    Depth-first, neighbors visited in ascending vertex order, so the output
    order is reproducible.  Stops after cap trails and flags truncation.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    adj = _adjacency(g)
    trails: list[Trail] = []
    truncated = False

    def dfs(u: int, last_w, current: Trail) -> bool:
        nonlocal truncated
        extensions = [(nbr, w) for (nbr, w) in adj[u] if last_w is None or w < last_w]
        if not extensions:
            if current:
                if len(trails) >= cap:
                    truncated = True
                    return False
                trails.append(list(current))
            return True
        for nbr, w in extensions:
            current.append((u, nbr))
            keep_going = dfs(nbr, w, current)
            current.pop()
            if not keep_going:
                return False
        return True

    dfs(v, None, [])
    return TrailEnumeration(trails=trails, truncated=truncated)


def brute_force_longest(g: WeightedGraph) -> EnumerationResult:
    """Exact longest-decreasing-trail length per start vertex and overall."""
    bad = validate(g)
    if bad:
        raise InvalidGraphError(bad)
    adj = _adjacency(g)
    nodes = 0

    def longest(u: int, last_w) -> int:
        nonlocal nodes
        nodes += 1
        best = 0
        for nbr, w in adj[u]:
            if last_w is None or w < last_w:
                ext = 1 + longest(nbr, w)
                if ext > best:
                    best = ext
        return best

    per_vertex = [longest(v, None) for v in range(g.n)]
    return EnumerationResult(
        per_vertex=per_vertex,
        optimum=max(per_vertex),
        nodes_explored=nodes,
    )
