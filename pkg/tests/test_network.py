"""Network parsing, serialization, and landmark assignment."""

import pytest

from thetadim import (
    NetworkParseError,
    NetworkSpec,
    assign_landmarks,
    field_network_text,
    format_network,
    metric_dimension_oracle,
    network_graph,
    parse_network,
)

TWO_NODES = """
node a
node b
link a b
"""


def path_spec(n):
    names = tuple(f"n{i}" for i in range(1, n + 1))
    links = tuple((f"n{i}", f"n{i + 1}") for i in range(1, n))
    return NetworkSpec(nodes=names, links=links)


def test_parse_two_nodes_one_link():
    spec = parse_network(TWO_NODES)
    assert spec.nodes == ("a", "b")
    assert spec.links == (("a", "b"),)


def test_parse_field_fixture():
    spec = parse_network(field_network_text())
    assert len(spec.nodes) == 12
    assert len(spec.links) == 13
    assert spec.nodes[0] == "Field 1"


def test_parse_reports_line_numbers():
    with pytest.raises(NetworkParseError) as exc:
        parse_network("node a\nnode b\nlnik a b\n")
    assert exc.value.line == 3
    assert "lnik" in str(exc.value)


@pytest.mark.parametrize(
    "text",
    [
        "node a\nnode a\n",
        "node a\nlink a b\n",
        "node a\nlink a a\n",
        "node a\nnode b\nlink a b\nlink b a\n",
        "node a\nnode b\nlink\n",
        "node\n",
        "frob a\n",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(NetworkParseError):
        parse_network(text)


def test_comments_and_blank_lines_ignored():
    spec = parse_network("# header\n\nnode a  # trailing\nnode b\nlink a b\n")
    assert spec.nodes == ("a", "b")


def test_quoted_names_with_spaces():
    spec = parse_network('node "big node"\nnode b\nlink "big node" b\n')
    assert spec.nodes == ("big node", "b")


def test_format_parse_round_trip():
    spec = parse_network(field_network_text())
    again = parse_network(format_network(spec))
    assert again.nodes == spec.nodes
    assert sorted(map(sorted, again.links)) == sorted(map(sorted, spec.links))


def test_round_trip_quotes_awkward_names():
    spec = NetworkSpec(nodes=("a b", "c#d", "plain"), links=(("a b", "c#d"),))
    again = parse_network(format_network(spec))
    assert again == spec


def test_graph_build_reports_disconnection():
    with pytest.raises(ValueError, match="disconnected"):
        network_graph(NetworkSpec(nodes=("a", "b"), links=()))


def test_graph_build_rejects_empty():
    with pytest.raises(ValueError):
        network_graph(NetworkSpec(nodes=(), links=()))


def test_field_fixture_landmarks():
    table = assign_landmarks(parse_network(field_network_text()))
    assert table.landmarks == ("Field 1", "Field 4")
    assert table.method == "closed-form (T3-P1)"
    assert len(set(table.codes.values())) == 12
    assert table.codes["Field 1"] == (0, 3)
    assert table.codes["Field 4"] == (3, 0)


def test_path_network_gets_single_end_landmark():
    table = assign_landmarks(path_spec(6))
    assert table.method == "oracle"
    assert table.landmarks == ("n1",)
    assert [table.codes[f"n{i}"] for i in range(1, 7)] == [(d,) for d in range(6)]


def test_complete_bipartite_network_needs_three_landmarks():
    # K_{2,3} happens to be theta-shaped, so the fast path serves it; its
    # landmark count still matches the oracle's n-2
    spec = NetworkSpec(
        nodes=("u1", "u2", "w1", "w2", "w3"),
        links=tuple((u, w) for u in ("u1", "u2") for w in ("w1", "w2", "w3")),
    )
    table = assign_landmarks(spec)
    assert len(table.landmarks) == 3
    assert table.method == "closed-form (T4-P1)"
    assert metric_dimension_oracle(network_graph(spec)).dimension == 3


def test_closed_form_and_oracle_agree_on_theta_networks():
    from thetadim import build_c, valid_triples

    for p, q, r in valid_triples(9):
        g = build_c(p, q, r)
        names = tuple(f"v{i}" for i in range(1, g.n + 1))
        spec = NetworkSpec(
            nodes=names,
            links=tuple((names[u - 1], names[v - 1]) for u, v in sorted(g.edges)),
        )
        table = assign_landmarks(spec)
        assert table.method.startswith("closed-form")
        assert len(table.landmarks) == metric_dimension_oracle(g).dimension


def test_oversized_non_theta_network_rejected():
    with pytest.raises(ValueError, match="cap"):
        assign_landmarks(path_spec(30))
    assert assign_landmarks(path_spec(30), oracle_cap=30).landmarks == ("n1",)
