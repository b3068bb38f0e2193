"""Resolving sets, vertex representations, and the exhaustive dimension oracle.

A landmark set W resolves a graph when every vertex gets a distinct vector
of hop distances to W.  The oracle realizes the definition directly by
enumerating candidate sets in size-then-lexicographic order, so its answers
are exact and serve as ground truth for every closed-form claim.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import DistanceMatrix, Graph, all_pairs

#: Largest vertex count the exhaustive oracle accepts by default.
DEFAULT_ORACLE_CAP = 24


@dataclass(frozen=True)
class BasisResult:
    """Exact metric dimension with one witness minimum resolving set.

    ``exhausted_below`` is the largest k for which every k-subset was
    enumerated and rejected (always ``dimension - 1``).
    """

    dimension: int
    witness: tuple[int, ...]
    exhausted_below: int


def representation(D: DistanceMatrix, v: int, landmarks: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Distance vector of ``v`` with respect to an ordered landmark list."""
    if not landmarks:
        raise ValueError("landmark list is empty")
    if len(set(landmarks)) != len(landmarks):
        raise ValueError(f"duplicate landmark in {tuple(landmarks)}")
    for w in (v, *landmarks):
        if not 1 <= w <= D.n:
            raise ValueError(f"vertex {w} outside 1..{D.n}")
    return tuple(D.dist(v, w) for w in landmarks)


def _first_collision(rows: list[list[int]], landmarks: tuple[int, ...]) -> tuple[int, int] | None:
    """Lexicographically first vertex pair sharing a representation, if any."""
    n = len(rows)
    keyed = sorted((tuple(rows[v - 1][w - 1] for w in landmarks), v) for v in range(1, n + 1))
    best: tuple[int, int] | None = None
    for (rep_a, a), (rep_b, b) in zip(keyed, keyed[1:]):
        if rep_a == rep_b:
            pair = (min(a, b), max(a, b))
            if best is None or pair < best:
                best = pair
    return best


def unresolved_pair(g: Graph, landmarks: list[int] | tuple[int, ...]) -> tuple[int, int] | None:
    """One vertex pair not separated by the landmarks, or None when resolving.

    The returned pair is the lexicographically smallest colliding pair, so
    failures are reproducible.
    """
    W = tuple(landmarks)
    if not W:
        raise ValueError("landmark set is empty")
    if len(set(W)) != len(W):
        raise ValueError(f"duplicate landmark in {W}")
    D = all_pairs(g)
    for w in W:
        if not 1 <= w <= g.n:
            raise ValueError(f"landmark {w} outside 1..{g.n}")
    return _first_collision(D.d.tolist(), W)


def is_resolving(g: Graph, landmarks: list[int] | tuple[int, ...]) -> bool:
    """True when every vertex has a distinct distance vector to the landmarks."""
    return unresolved_pair(g, landmarks) is None


def is_minimal_resolving(g: Graph, landmarks: list[int] | tuple[int, ...]) -> bool:
    """True when no single landmark can be dropped without losing resolution.

    Raises ``ValueError`` when the given set is not resolving to begin with.
    """
    W = tuple(landmarks)
    if not is_resolving(g, W):
        raise ValueError(f"{W} is not a resolving set")
    if len(W) == 1:
        return True
    return all(not is_resolving(g, W[:i] + W[i + 1 :]) for i in range(len(W)))


def metric_dimension_oracle(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> BasisResult:
    """Exact metric dimension by exhaustive subset enumeration.

    Candidate sets are tried in increasing size, lexicographically within a
    size, and the first resolving set is returned, so the witness is the
    lexicographically smallest minimum resolving set.  Requires a connected
    graph with at most ``cap`` vertices.
    """
    n = g.n
    if n > cap:
        raise ValueError(f"graph order {n} exceeds the oracle cap {cap}")
    if not g.is_connected():
        raise ValueError("metric dimension oracle requires a connected graph")
    rows = all_pairs(g).d.tolist()
    vertices = range(1, n + 1)
    for k in range(1, n + 1):
        for cand in itertools.combinations(vertices, k):
            if _first_collision(rows, cand) is None:
                return BasisResult(dimension=k, witness=cand, exhausted_below=k - 1)
    raise AssertionError("unreachable: the full vertex set always resolves")


def _degree_multiset(g: Graph) -> list[int]:
    return sorted(g.degree(v) for v in range(1, g.n + 1))


def _is_path(g: Graph) -> bool:
    if g.n == 1:
        return len(g.edges) == 0
    if len(g.edges) != g.n - 1 or not g.is_connected():
        return False
    return _degree_multiset(g) == [1, 1] + [2] * (g.n - 2)


def _is_cycle(g: Graph) -> bool:
    return (
        g.n >= 3
        and len(g.edges) == g.n
        and g.is_connected()
        and _degree_multiset(g) == [2] * g.n
    )


def _is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def _is_complete_bipartite(g: Graph) -> bool:
    """Connected graph whose BFS levels split it into two fully joined sides."""
    if not g.is_connected():
        return False
    from .graphs import bfs_distances

    level = bfs_distances(g, 1)
    side_a = {v for v in range(1, g.n + 1) if level[v - 1] % 2 == 0}
    size_a = len(side_a)
    if size_a == 0 or size_a == g.n:
        return False
    if len(g.edges) != size_a * (g.n - size_a):
        return False
    return all((u in side_a) != (v in side_a) for u, v in g.edges)


def known_dimension_special(g: Graph) -> int | None:
    """Dimension of a recognized special family, or None.

    Covers paths (1), cycles (2), complete graphs (n-1) and complete
    bipartite graphs on four or more vertices (n-2).  Everything else,
    including theta graphs, returns None and falls to the oracle.
    """
    if _is_path(g):
        return 1
    if _is_cycle(g):
        return 2
    if _is_complete(g):
        return g.n - 1
    if g.n >= 4 and _is_complete_bipartite(g):
        return g.n - 2
    return None
