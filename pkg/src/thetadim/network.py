"""Named networks and landmark assignment.

A network file declares nodes and links, one per line, with shell-style
quoting for names that contain spaces::

    # comment
    node "Field 1"
    node "Field 2"
    link "Field 1" "Field 2"

Landmark assignment computes a metric basis for the network — through the
closed-form case formulas when the network is a theta graph, otherwise
through the exhaustive oracle — and gives every node its distance-vector
code relative to the landmarks.  Codes are pairwise distinct by definition
of a resolving set, and that property is re-checked on every call rather
than trusted.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass
from importlib import resources

from .closed_form import closed_form_basis
from .graphs import Graph, all_pairs, new_graph
from .resolve import DEFAULT_ORACLE_CAP, metric_dimension_oracle, representation
from .theta import detect_theta


class NetworkParseError(ValueError):
    """Malformed network text; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class NetworkSpec:
    """Parsed network: node names in declaration order, plus name-pair links."""

    nodes: tuple[str, ...]
    links: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class LandmarkTable:
    """Landmark names (declaration order) and per-node distance codes."""

    landmarks: tuple[str, ...]
    codes: dict[str, tuple[int, ...]]
    method: str


def parse_network(text: str) -> NetworkSpec:
    """Parse network text, rejecting duplicate nodes, unknown names in links,
    self-links, and duplicate links.  Comments (#) and blank lines are
    ignored."""
    nodes: list[str] = []
    seen_nodes: set[str] = set()
    links: list[tuple[str, str]] = []
    seen_links: set[tuple[str, str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        try:
            tokens = shlex.split(raw, comments=True)
        except ValueError as exc:
            raise NetworkParseError(lineno, f"unparsable line ({exc})") from exc
        if not tokens:
            continue
        directive, *args = tokens
        if directive == "node":
            if len(args) != 1:
                raise NetworkParseError(lineno, "node takes exactly one name")
            (name,) = args
            if not name:
                raise NetworkParseError(lineno, "empty node name")
            if name in seen_nodes:
                raise NetworkParseError(lineno, f"duplicate node {name!r}")
            seen_nodes.add(name)
            nodes.append(name)
        elif directive == "link":
            if len(args) != 2:
                raise NetworkParseError(lineno, "link takes exactly two names")
            a, b = args
            for name in (a, b):
                if name not in seen_nodes:
                    raise NetworkParseError(lineno, f"unknown node {name!r}")
            if a == b:
                raise NetworkParseError(lineno, f"self-link at {a!r}")
            key = (min(a, b), max(a, b))
            if key in seen_links:
                raise NetworkParseError(lineno, f"duplicate link {a!r} -- {b!r}")
            seen_links.add(key)
            links.append((a, b))
        else:
            raise NetworkParseError(lineno, f"unknown directive {directive!r}")
    return NetworkSpec(nodes=tuple(nodes), links=tuple(links))


def format_network(spec: NetworkSpec) -> str:
    """Render a spec back to network text; parse(format(spec)) round-trips."""
    lines = [f"node {shlex.quote(name)}" for name in spec.nodes]
    lines.extend(f"link {shlex.quote(a)} {shlex.quote(b)}" for a, b in spec.links)
    return "\n".join(lines) + "\n"


def network_graph(spec: NetworkSpec) -> Graph:
    """Labelled graph of the network (node i of the declaration order is
    vertex i).  Raises ``ValueError`` when the network is disconnected."""
    if not spec.nodes:
        raise ValueError("network declares no nodes")
    index = {name: i for i, name in enumerate(spec.nodes, start=1)}
    g = new_graph(len(spec.nodes), [(index[a], index[b]) for a, b in spec.links])
    if not g.is_connected():
        raise ValueError("network graph is disconnected")
    return g


def assign_landmarks(spec: NetworkSpec, oracle_cap: int = DEFAULT_ORACLE_CAP) -> LandmarkTable:
    """Compute landmarks and per-node codes for a connected network.

    Theta-shaped networks take the closed-form fast path (method records the
    case tag); everything else falls back to the exhaustive oracle, which
    requires at most ``oracle_cap`` nodes.
    """
    g = network_graph(spec)
    shape = detect_theta(g)
    if shape is not None:
        params = shape.params
        result = closed_form_basis(params.p, params.q, params.r)
        original = {canonical: orig for orig, canonical in shape.relabeling.items()}
        basis = sorted(original[b] for b in result.basis)
        method = f"closed-form ({result.case.tag})"
    else:
        oracle = metric_dimension_oracle(g, cap=oracle_cap)
        basis = sorted(oracle.witness)
        method = "oracle"
    D = all_pairs(g)
    codes = {
        name: representation(D, v, basis)
        for v, name in enumerate(spec.nodes, start=1)
    }
    if len(set(codes.values())) != len(spec.nodes):
        raise RuntimeError("landmark codes collide; resolving-set postcondition violated")
    return LandmarkTable(
        landmarks=tuple(spec.nodes[v - 1] for v in basis),
        codes=codes,
        method=method,
    )


def field_network_text() -> str:
    """The bundled twelve-field logistics fixture (two overlapping service
    cycles sharing three fields)."""
    return resources.files("thetadim").joinpath("data/field_network.txt").read_text()
