"""Construction and recognition of type-III bicyclic (theta) graphs.

A theta graph consists of two degree-3 hubs joined by three internally
disjoint paths.  The ``C_{p,q,r}`` parameterization counts vertices per
path: ``p`` and ``r`` count the internal vertices of the two outer paths,
while ``q`` counts the middle path including both hubs.  Canonical labels
follow a fixed layout:

    outer one   v_1 .. v_p                (v_1 adjacent to hub a)
    middle      v_{p+1} .. v_{p+q}        (hub a = v_{p+1}, hub b = v_{p+q})
    outer two   v_{p+q+1} .. v_{p+q+r}    (v_{p+q+1} adjacent to hub a)

plus connector edges {v_{p+1}, v_1}, {v_p, v_{p+q}}, {v_{p+1}, v_{p+q+1}}
and {v_{p+q+r}, v_{p+q}}.  When an outer count is zero its two connectors
collapse into a single hub-hub edge, keeping the remaining labels
contiguous.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, new_graph


class InvalidParamsError(ValueError):
    """Raised when a (p, q, r) triple does not describe a simple theta graph."""


@dataclass(frozen=True)
class ThetaParams:
    """Path vertex counts (p, q, r) of a ``C_{p,q,r}`` graph."""

    p: int
    q: int
    r: int

    @property
    def n(self) -> int:
        return self.p + self.q + self.r


@dataclass(frozen=True)
class ThetaShape:
    """A theta graph recognized inside an arbitrarily labelled graph.

    ``path_vertices`` holds the three hub-to-hub paths in original labels:
    outer-one internals, the middle path including both hubs, and outer-two
    internals, each ordered starting from ``hub_a``.  ``relabeling`` maps
    original labels onto the canonical layout of ``build_c(params)``.
    """

    params: ThetaParams
    hub_a: int
    hub_b: int
    path_vertices: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    relabeling: dict[int, int]


def validate_params(p: int, q: int, r: int) -> str | None:
    """Return None when (p, q, r) is valid, else a description of the violation.

    Validity requires q >= 2, at most one of {p = 0, q = 2, r = 0} (two or
    more would duplicate the hub-hub edge, i.e. a multigraph), and total
    order p + q + r >= 4.
    """
    if p < 0 or q < 0 or r < 0:
        return f"negative path count in ({p}, {q}, {r})"
    if q < 2:
        return f"middle path needs at least its two hubs, got q={q}"
    degenerate = (p == 0) + (q == 2) + (r == 0)
    if degenerate > 1:
        return (
            f"({p}, {q}, {r}) collapses two hub-to-hub paths onto the same "
            "edge (multigraph)"
        )
    if p + q + r < 4:
        return f"total vertex count {p + q + r} below the minimum of 4"
    return None


def _require_valid(p: int, q: int, r: int) -> None:
    violation = validate_params(p, q, r)
    if violation is not None:
        raise InvalidParamsError(violation)


def build_c(p: int, q: int, r: int) -> Graph:
    """Construct ``C_{p,q,r}`` with canonical labels; n vertices, n+1 edges."""
    _require_valid(p, q, r)
    n = p + q + r
    hub_a, hub_b = p + 1, p + q
    edges: list[tuple[int, int]] = []
    for start, count in ((1, p), (p + 1, q), (p + q + 1, r)):
        edges.extend((v, v + 1) for v in range(start, start + count - 1))
    if p > 0:
        edges.append((hub_a, 1))
        edges.append((p, hub_b))
    else:
        edges.append((hub_a, hub_b))
    if r > 0:
        edges.append((hub_a, p + q + 1))
        edges.append((p + q + r, hub_b))
    else:
        edges.append((hub_a, hub_b))
    return new_graph(n, edges)


def to_theta_lengths(p: int, q: int, r: int) -> tuple[int, int, int]:
    """Edge counts (p+1, q-1, r+1) of the three hub-to-hub paths."""
    _require_valid(p, q, r)
    return (p + 1, q - 1, r + 1)


def swap_isomorphism(p: int, q: int, r: int) -> dict[int, int]:
    """Vertex bijection from ``C_{p,q,r}`` labels onto ``C_{r,q,p}`` labels.

    Outer paths trade places, the middle path keeps its order, and hubs map
    onto hubs; the map is adjacency-preserving.
    """
    _require_valid(p, q, r)
    sigma: dict[int, int] = {}
    for i in range(1, p + 1):
        sigma[i] = r + q + i
    for i in range(q):
        sigma[p + 1 + i] = r + 1 + i
    for j in range(1, r + 1):
        sigma[p + q + j] = j
    return sigma


def _hub_chains(g: Graph) -> tuple[int, int, list[tuple[int, ...]]] | None:
    """Locate the two hubs and the three hub-to-hub chains, or None.

    Each chain is the tuple of its internal (degree-2) vertices ordered away
    from ``hub_a``.  Rejects anything that is not a theta graph: wrong edge
    count, wrong degree sequence, disconnected input, or two cycles hanging
    off the same hub (a chain walking back to its start).
    """
    n = g.n
    if n < 4 or len(g.edges) != n + 1:
        return None
    degrees = [g.degree(v) for v in range(1, n + 1)]
    hubs = [v for v in range(1, n + 1) if degrees[v - 1] == 3]
    if len(hubs) != 2 or any(d not in (2, 3) for d in degrees):
        return None
    if not g.is_connected():
        return None
    hub_a, hub_b = hubs
    chains: list[tuple[int, ...]] = []
    for first in g.adjacency[hub_a]:
        chain: list[int] = []
        prev, cur = hub_a, first
        while g.degree(cur) == 2:
            chain.append(cur)
            step = [w for w in g.adjacency[cur] if w != prev]
            prev, cur = cur, step[0]
        if cur != hub_b:
            return None
        chains.append(tuple(chain))
    if 2 + sum(len(c) for c in chains) != n:
        return None
    return hub_a, hub_b, chains


def theta_parameterizations(g: Graph) -> list[ThetaShape]:
    """All three C-parameterizations of a theta graph, preferred order first.

    Each hub-to-hub path can play the middle role, giving one shape per
    choice.  Shapes are ordered by (path length, internal labels) of the
    chosen middle, so the shortest path is the default middle; within one
    shape the longer outer path becomes outer-one.  Returns an empty list
    when ``g`` is not a theta graph.
    """
    probe = _hub_chains(g)
    if probe is None:
        return []
    hub_a, hub_b, chains = probe
    order = sorted(range(3), key=lambda i: (len(chains[i]), chains[i]))
    shapes: list[ThetaShape] = []
    for mi in order:
        middle = chains[mi]
        outer_one, outer_two = sorted(
            (chains[j] for j in range(3) if j != mi),
            key=lambda c: (-len(c), c),
        )
        p, q, r = len(outer_one), len(middle) + 2, len(outer_two)
        relabeling: dict[int, int] = {hub_a: p + 1, hub_b: p + q}
        for offset, v in enumerate(outer_one, start=1):
            relabeling[v] = offset
        for offset, v in enumerate(middle, start=p + 2):
            relabeling[v] = offset
        for offset, v in enumerate(outer_two, start=p + q + 1):
            relabeling[v] = offset
        shapes.append(
            ThetaShape(
                params=ThetaParams(p, q, r),
                hub_a=hub_a,
                hub_b=hub_b,
                path_vertices=(outer_one, (hub_a, *middle, hub_b), outer_two),
                relabeling=relabeling,
            )
        )
    return shapes


def detect_theta(g: Graph) -> ThetaShape | None:
    """Recognize a theta graph and return its preferred parameterization.

    The preferred shape takes the shortest hub-to-hub path as the middle
    path (hub_a being the degree-3 vertex with the smaller original label),
    which is the parameterization the closed-form dispatcher consumes.
    Returns None when ``g`` is not a theta graph; that outcome is a result,
    not an error.
    """
    shapes = theta_parameterizations(g)
    return shapes[0] if shapes else None
