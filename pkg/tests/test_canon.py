import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from levi import families as fam
from levi.canon import are_isomorphic, canonical, canonical_form, isomorphism
from levi.graph import Graph

from conftest import corpus, random_relabel, to_nx


@pytest.mark.parametrize("name,g", corpus(), ids=[n for n, _ in corpus()])
def test_certificate_invariant_under_relabelling(name, g):
    rng = random.Random(name)
    cert = canonical_form(g)
    for _ in range(100 if g.vertex_count <= 40 else 10):
        assert canonical_form(random_relabel(g, rng)) == cert


@pytest.mark.parametrize("name,g", corpus(), ids=[n for n, _ in corpus()])
def test_isomorphism_mapping_preserves_edges(name, g):
    h = random_relabel(g, random.Random(7))
    phi = isomorphism(g, h)
    assert phi is not None
    assert {tuple(sorted((phi[a], phi[b]))) for a, b in g.edges} == set(h.edges)


def test_certificates_agree_with_networkx_on_corpus_pairs():
    items = corpus()
    for i, (_, a) in enumerate(items):
        for _, b in items[i + 1 :]:
            if a.vertex_count == b.vertex_count:
                same = canonical_form(a) == canonical_form(b)
                assert same == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_known_coincidences_in_corpus():
    graphs = dict(corpus())
    assert are_isomorphic(graphs["Heawood"], graphs["D(7)"])
    assert are_isomorphic(graphs["Desargues"], graphs["T1(1)"])
    assert are_isomorphic(graphs["cyclic(13,1,5)"], graphs["D(13)"])
    assert not are_isomorphic(graphs["Pappus"], graphs["D(9)"])


def test_hexagon():
    hexagon = Graph.from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)])
    assert are_isomorphic(hexagon, fam.circuit(6))
    assert not are_isomorphic(fam.circuit(6), Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))


def test_pappus_rotation_is_automorphism():
    # the chord pattern repeats with period 6 around the Hamilton circuit
    g = fam.pappus()
    for shift in range(1, 18):
        rotated = g.relabel([(v + shift) % 18 for v in range(18)])
        assert (rotated.edges == g.edges) == (shift % 6 == 0)


def test_automorphism_group_generators_are_automorphisms():
    g = fam.heawood()
    res = canonical(g)
    assert res.automorphisms
    for perm in res.automorphisms:
        assert g.relabel(list(perm)).edges == g.edges


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 8), st.data())
def test_agrees_with_networkx(n, data):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]

    def draw():
        return Graph.from_edges(n, data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else [])

    g1, g2 = draw(), draw()
    assert are_isomorphic(g1, g2) == nx.is_isomorphic(to_nx(g1), to_nx(g2))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([g for _, g in corpus() if g.vertex_count <= 30]), st.randoms(use_true_random=False))
def test_two_switch_changes_class_or_agrees_with_networkx(g, rng):
    # a 2-switch keeps degrees; compare with networkx on the result
    e1, e2 = rng.sample(list(g.edges), 2)
    (a, b), (c, d) = e1, e2
    if len({a, b, c, d}) < 4 or g.has_edge(a, d) or g.has_edge(c, b):
        return
    edges = [e for e in g.edges if e not in (e1, e2)] + [(a, d), (c, b)]
    h = Graph.from_edges(g.vertex_count, edges)
    assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
