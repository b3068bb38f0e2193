"""Immutable simple graphs on 1-based vertex labels, with BFS hop distances.

Graphs and their distance matrices are frozen after construction and safe to
share across threads; every downstream computation in this package consumes
the cached all-pairs matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

#: Sentinel distance between vertices in different components.  Kept as a
#: dedicated constant (never a "large enough" magic number) so disconnected
#: inputs fail loudly instead of producing plausible-looking distances.
UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 1..n with a deduplicated edge set.

    Edges are stored as ``(min(u, v), max(u, v))`` pairs.  Instances are
    immutable; use :func:`new_graph` to construct one with validation.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuples indexed by vertex label (index 0 unused)."""
        nbrs: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(b)) for b in nbrs)

    @cached_property
    def _distance_matrix(self) -> DistanceMatrix:
        rows = [bfs_distances(self, u) for u in range(1, self.n + 1)]
        d = np.array(rows, dtype=np.int64).reshape(self.n, self.n)
        d.setflags(write=False)
        return DistanceMatrix(n=self.n, d=d)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def is_connected(self) -> bool:
        return UNREACHABLE not in bfs_distances(self, 1)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop counts; entry ``d[u-1, v-1]`` is the u-v distance.

    The backing array is read-only.  ``UNREACHABLE`` marks vertex pairs in
    different components.
    """

    n: int
    d: np.ndarray

    def dist(self, u: int, v: int) -> int:
        return int(self.d[u - 1, v - 1])


def new_graph(n: int, edges: list[tuple[int, int]] | tuple[tuple[int, int], ...]) -> Graph:
    """Build a simple graph, deduplicating repeated edges.

    Raises ``ValueError`` for a non-positive vertex count, an endpoint
    outside 1..n, or a self-loop.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    dedup: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        dedup.add((min(u, v), max(u, v)))
    return Graph(n=n, edges=frozenset(dedup))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from ``source`` to every vertex, as a list indexed by v-1.

    Unreachable vertices get the ``UNREACHABLE`` sentinel.
    """
    if not 1 <= source <= g.n:
        raise ValueError(f"source {source} outside 1..{g.n}")
    dist = [UNREACHABLE] * (g.n + 1)
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist[1:]


def all_pairs(g: Graph) -> DistanceMatrix:
    """Cached all-pairs distance matrix of ``g`` (one BFS per vertex)."""
    return g._distance_matrix
