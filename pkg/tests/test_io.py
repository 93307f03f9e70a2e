import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from levi import families as fam
from levi.canon import are_isomorphic
from levi.errors import ParseError
from levi.graph import Graph
from levi.io import from_edgelist, from_graph6, read_graph, read_graphs, to_edgelist, to_graph6, write_graph

from conftest import corpus, to_nx


@pytest.mark.parametrize("name,g", corpus(), ids=[n for n, _ in corpus()])
def test_graph6_matches_networkx_encoder(name, g):
    assert to_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).strip()


@pytest.mark.parametrize("n", [0, 1, 62, 63, 100])
def test_graph6_size_encodings(n):
    rng = random.Random(n)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.05]
    g = Graph.from_edges(n, pairs)
    data = to_graph6(g)
    assert data == nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert from_graph6(data) == g


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 14), st.data())
def test_graph6_round_trip(n, data):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    g = Graph.from_edges(n, chosen)
    assert from_graph6(to_graph6(g)) == g
    assert from_edgelist(to_edgelist(g)) == g


def test_heawood_graph6_round_trip_isomorphic():
    g = fam.heawood()
    assert are_isomorphic(from_graph6(to_graph6(g)), g)


def test_k33_edgelist_round_trip_identical():
    g = fam.k33()
    text = to_edgelist(g)
    assert text.splitlines()[0] == b"6 9"
    assert from_edgelist(text).edges == g.edges


def test_header_accepted():
    g = fam.pappus()
    assert from_graph6(b">>graph6<<" + to_graph6(g)) == g


def test_truncated_graph6():
    data = to_graph6(fam.heawood())
    with pytest.raises(ParseError) as info:
        from_graph6(data[:-2])
    assert info.value.offset == len(data) - 2


def test_invalid_graph6_byte():
    with pytest.raises(ParseError) as info:
        from_graph6(b"E\x20")
    assert info.value.offset == 1


@pytest.mark.parametrize("text", [b"3 2\n0 1\n", b"x y\n", b"3 1\n0 9\n", b"3 1\n0 0\n"])
def test_bad_edgelists(text):
    with pytest.raises(ParseError):
        from_edgelist(text)


def test_read_graphs_multiple_lines_and_autodetect():
    data = write_graph(fam.k33()) + write_graph(fam.heawood())
    graphs = list(read_graphs(data))
    assert [g.vertex_count for g in graphs] == [6, 14]
    assert read_graph(to_edgelist(fam.k33())) == fam.k33()


def test_parse_error_offset_on_second_line():
    first = write_graph(fam.k33())
    with pytest.raises(ParseError) as info:
        list(read_graphs(first + b"M??\n"))
    assert info.value.offset >= len(first)
