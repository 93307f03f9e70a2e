from __future__ import annotations

import functools
import itertools
import random

import networkx as nx
import pytest

from levi import families as fam
from levi.graph import Graph, bipartition, components
from levi.martinetti import extension_representatives


@functools.lru_cache(maxsize=None)
def corpus() -> tuple[tuple[str, Graph], ...]:
    items = [
        ("K33", fam.k33()),
        ("Heawood", fam.heawood()),
        ("Pappus", fam.pappus()),
        ("Desargues", fam.levi(fam.desargues_configuration())),
        ("cyclic(13,1,5)", fam.cyclic_levi(13, 1, 5)),
    ]
    items += [(f"D({n})", fam.d_graph(n)) for n in range(7, 16)]
    items += [(f"T{v}({n})", fam.t_graph(n, v)) for n in (1, 2) for v in (1, 2, 3)]
    items.append(("H0*H0", fam.heawood_star_heawood()[0]))
    items.append(("Pappus+", extension_representatives(fam.pappus())[0][1]))
    return tuple(items)


def corpus_upto(max_vertices: int) -> list[tuple[str, Graph]]:
    return [(name, g) for name, g in corpus() if g.vertex_count <= max_vertices]


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.vertex_count))
    rng.shuffle(perm)
    return g.relabel(perm)


# -- independent oracles ---------------------------------------------------------------

def biadjacency(g: Graph) -> list[list[int]]:
    side = bipartition(g).side_of
    rows = [v for v in range(g.vertex_count) if side[v] == 0]
    cols = [v for v in range(g.vertex_count) if side[v] == 1]
    return [[1 if g.has_edge(r, c) else 0 for c in cols] for r in rows]


def naive_permanent(matrix: list[list[int]]) -> int:
    """Sum over all permutations of the product of selected entries."""
    n = len(matrix)
    if n == 0:
        return 1
    if any(len(row) != n for row in matrix):
        return 0
    total = 0
    for perm in itertools.permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            if not matrix[i][j]:
                prod = 0
                break
        total += prod
    return total


def matchings_by_permutation(g: Graph) -> list[frozenset[int]]:
    """Perfect matchings of a bipartite graph read off the nonzero permutation terms."""
    side = bipartition(g).side_of
    rows = [v for v in range(g.vertex_count) if side[v] == 0]
    cols = [v for v in range(g.vertex_count) if side[v] == 1]
    out = []
    for perm in itertools.permutations(range(len(cols))):
        if all(g.has_edge(r, cols[j]) for r, j in zip(rows, perm)):
            out.append(frozenset(g.edge_id(r, cols[j]) for r, j in zip(rows, perm)))
    return out


def brute_force_essential_4ec(g: Graph) -> tuple[bool, frozenset[int] | None]:
    """Definition-direct: try every set of at most three edges."""
    m = g.edge_count
    for size in (1, 2, 3):
        for triple in itertools.combinations(range(m), size):
            comps = components(g, set(triple))
            if len(comps) < 2:
                continue
            if size < 3 or min(len(c) for c in comps) >= 2:
                return False, frozenset(triple)
    return True, None


@pytest.fixture(scope="session")
def graphs():
    return dict(corpus())
