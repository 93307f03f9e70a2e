import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from levi import families as fam
from levi.cuts import edge_connectivity, min_edge_cut
from levi.errors import DisconnectedInput, NotSimple, NotTwoRegular
from levi.graph import BLACK, WHITE, Graph, Path, bipartition, components, decompose, girth

from conftest import corpus, to_nx


def two_hexagons_bridged() -> Graph:
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(6 + i, 6 + (i + 1) % 6) for i in range(6)]
    return Graph.from_edges(12, edges + [(0, 6)])


def test_edges_are_sorted_and_normalised():
    g = Graph.from_edges(4, [(3, 2), (1, 0), (0, 3)])
    assert g.edges == ((0, 1), (0, 3), (2, 3))
    assert g.edge_id(3, 0) == 1


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]])
def test_rejects_non_simple(edges):
    with pytest.raises(NotSimple):
        Graph.from_edges(3, edges)


def test_labels_must_be_unique():
    with pytest.raises(NotSimple):
        Graph(2, ((0, 1),), ("a", "a"))


def test_relabel_keeps_labels_attached():
    g = fam.segment_chain(1)
    h = g.relabel([5, 4, 3, 2, 1, 0])
    assert h.vertex("u_1^1") == 5
    assert h.has_edge(h.vertex("u_1^1"), h.vertex("v_1^1"))


# -- girth ------------------------------------------------------------------------------

def test_girth_small_cases():
    assert girth(fam.k33()) == 4
    assert girth(fam.circuit(6)) == 6
    assert girth(Graph.from_edges(3, [(0, 1), (1, 2)])) == math.inf


@pytest.mark.parametrize("name,g", corpus(), ids=[n for n, _ in corpus()])
def test_girth_matches_networkx(name, g):
    assert girth(g) == nx.girth(to_nx(g))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 11), st.data())
def test_girth_random_graphs(n, data):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    g = Graph.from_edges(n, chosen)
    assert girth(g) == nx.girth(to_nx(g))


# -- bipartition ------------------------------------------------------------------------

def test_bipartition_hexagon_and_triangle():
    bp = bipartition(fam.circuit(6))
    assert bp.side_of == (0, 1, 0, 1, 0, 1)
    assert bipartition(fam.circuit(3)) is None


def test_bipartition_of_d9_follows_node_fill():
    g = fam.d_graph(9)
    bp = bipartition(g)
    black = {g.labels[v] for v in bp.black}
    expected = {f"{x}_{i}^{j}" for i in (1, 2, 3) for x, j in (("u", 1), ("u", 3), ("v", 2))}
    assert black == expected
    assert {g.labels[v] for v in bp.white} == {
        f"{x}_{i}^{j}" for i in (1, 2, 3) for x, j in (("u", 2), ("u", 4), ("v", 1))
    }


@pytest.mark.parametrize("name,g", corpus(), ids=[n for n, _ in corpus()])
def test_bipartite_implies_even_girth(name, g):
    bp = bipartition(g)
    assert bp is not None
    assert all(bp.side_of[a] != bp.side_of[b] for a, b in g.edges)
    assert girth(g) % 2 == 0


@pytest.mark.parametrize("name,g", corpus(), ids=[n for n, _ in corpus()])
def test_cubic_edge_count(name, g):
    assert g.is_cubic()
    assert 2 * g.edge_count == 3 * g.vertex_count


# -- edge connectivity --------------------------------------------------------------------

def test_edge_connectivity_examples():
    assert edge_connectivity(fam.heawood()) == 3
    assert edge_connectivity(fam.circuit(6)) == 2
    assert edge_connectivity(two_hexagons_bridged()) == 1


def test_edge_connectivity_rejects_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedInput):
        edge_connectivity(g)


def test_min_edge_cut_disconnects():
    g = two_hexagons_bridged()
    cut = min_edge_cut(g)
    assert len(components(g, set(cut.edges))) == 2
    assert cut.smaller_side_vertex_count == 6


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 10), st.data())
def test_edge_connectivity_random(n, data):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=len(pairs)))
    g = Graph.from_edges(n, chosen)
    h = to_nx(g)
    if not nx.is_connected(h):
        with pytest.raises(DisconnectedInput):
            edge_connectivity(g)
    else:
        assert edge_connectivity(g) == nx.edge_connectivity(h)


# -- decompose ------------------------------------------------------------------------------

def test_decompose_k33_minus_matching():
    g = fam.k33()
    matching = {g.edge_id(0, 3), g.edge_id(1, 4), g.edge_id(2, 5)}
    dec = decompose(g, [k for k in range(g.edge_count) if k not in matching])
    assert dec.lengths == (6,)
    assert dec.circuits[0][0] == 0


def test_decompose_two_squares():
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)])
    dec = decompose(g, range(g.edge_count))
    assert dec.lengths == (4, 4)
    assert dec.circuits == ((0, 1, 2, 3), (4, 5, 6, 7))


def test_decompose_canonical_rotation():
    g = fam.circuit(5).relabel([3, 0, 4, 1, 2])
    dec = decompose(g, range(5))
    c = dec.circuits[0]
    assert c[0] == 0 and c[1] < c[-1]


def test_decompose_names_offending_vertex():
    g = fam.k33()
    with pytest.raises(NotTwoRegular) as info:
        decompose(g, [g.edge_id(0, 3), g.edge_id(0, 4), g.edge_id(0, 5)])
    assert info.value.vertex == 0


def test_decompose_partial_support():
    g = fam.k33()
    square = [g.edge_id(0, 3), g.edge_id(3, 1), g.edge_id(1, 4), g.edge_id(4, 0)]
    dec = decompose(g, square, spanning=False)
    assert dec.lengths == (4,)
    assert sorted(dec.circuits[0]) == [0, 1, 3, 4]


def test_path_circuit_notation():
    assert Path((1, 2, 3, 1)).is_circuit
    assert len(Path((1, 2, 3, 1))) == 3
    assert not Path((1, 2, 3)).is_circuit
