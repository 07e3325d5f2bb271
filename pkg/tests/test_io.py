import pytest
from hypothesis import given

from hyperturan import Hypergraph, ParseError, complete, emit_hypergraph, parse_hypergraph
from hyperturan.io import digest, read_hypergraph, write_hypergraph
from hyperturan.named import resolve_named

from conftest import hypergraphs


def test_parse_k4_3():
    text = "3 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n"
    assert parse_hypergraph(text) == complete(4, 3)
    assert emit_hypergraph(parse_hypergraph(text)) == text


def test_parse_skips_comments_and_blank_lines():
    H = parse_hypergraph("# a path\n2 3\n\n1 0\n2 1\n")
    assert H.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text, line", [
    ("3 4\n0 1 2\n2 1 0\n", 3),       # duplicate
    ("3 5\n0 1 5\n", 2),              # range
    ("3\n0 1 2\n", 1),                # header
    ("x y\n", 1),
    ("3 5\n0 1\n", 2),                # arity
    ("3 5\n0 1 1\n", 2),              # repeated vertex
    ("3 5\n0 a 1\n", 2),
    ("", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_hypergraph(text)
    assert err.value.line == line
    assert f"line {line}" in str(err.value)


@given(hypergraphs())
def test_round_trip(H):
    text = emit_hypergraph(H)
    assert parse_hypergraph(text) == H
    assert emit_hypergraph(parse_hypergraph(text)) == text


def test_write_returns_digest(tmp_path):
    H = resolve_named("K4_3_minus_e")
    path = tmp_path / "g.hg"
    sha = write_hypergraph(H, path)
    assert sha == digest(H)
    assert read_hypergraph(path) == H


@pytest.mark.parametrize("name, k, n, e", [
    ("K4_3", 3, 4, 4), ("K5_4", 4, 5, 5), ("K8_5", 5, 8, 56), ("K4_3_minus_e", 3, 4, 3),
    ("P3", 2, 3, 2), ("edgeless(6,3)", 3, 6, 0), ("edgeless_5_2", 2, 5, 0),
])
def test_named_graphs(name, k, n, e):
    H = resolve_named(name)
    assert (H.k, H.n, len(H)) == (k, n, e)


@pytest.mark.parametrize("name", ["K9_3", "K3_6", "K2_3", "C5", "edgeless(3)"])
def test_unknown_names_rejected(name):
    with pytest.raises(ValueError):
        resolve_named(name)
