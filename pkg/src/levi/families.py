"""Constructors for configurations and the irreducible Levi graph families.

Family builders keep the symbolic vertex names (``u_i^j``, ``w_m^j`` and so
on) in the graph's label sidecar; indices are 1-based like the names.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from levi.errors import (
    BipartitenessBroken,
    GirthTooSmall,
    InvalidParameter,
    NoBipartition,
    NotCubic,
    NotLinear,
)
from levi.graph import BLACK, Graph, bipartition, components, girth


@dataclass(frozen=True)
class Configuration:
    """A symmetric n_3 configuration on points ``0..n-1``."""

    n: int
    lines: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        lines = tuple(tuple(sorted(ln)) for ln in self.lines)
        object.__setattr__(self, "lines", lines)
        if len(lines) != self.n:
            raise InvalidParameter(f"{len(lines)} lines for {self.n} points")
        on = [0] * self.n
        for ln in lines:
            if len(ln) != 3 or len(set(ln)) != 3:
                raise InvalidParameter(f"line {ln} does not have 3 distinct points")
            for p in ln:
                if not 0 <= p < self.n:
                    raise InvalidParameter(f"point {p} out of range")
                on[p] += 1
        if any(k != 3 for k in on):
            raise InvalidParameter("every point must lie on exactly 3 lines")
        for a, b in itertools.combinations(range(self.n), 2):
            if len(set(lines[a]) & set(lines[b])) >= 2:
                raise NotLinear(f"lines {lines[a]} and {lines[b]} share two points")


@dataclass(frozen=True)
class CyclicParams:
    n: int
    b: int
    c: int

    def __post_init__(self):
        if not 0 < self.b < self.c < self.n:
            raise InvalidParameter(f"need 0 < b < c < n, got n={self.n} b={self.b} c={self.c}")


def cyclic_configuration(n: int, b: int, c: int) -> Configuration:
    CyclicParams(n, b, c)
    return Configuration(n, tuple((j, (j + b) % n, (j + c) % n) for j in range(n)))


def levi(c: Configuration) -> Graph:
    """Points become vertices ``0..n-1``, lines ``n..2n-1``."""
    n = c.n
    edges = [(p, n + j) for j, ln in enumerate(c.lines) for p in ln]
    labels = tuple(f"p{i}" for i in range(n)) + tuple(f"l{j}" for j in range(n))
    return Graph(2 * n, tuple(edges), labels)


def config_from_levi(g: Graph, points: int = BLACK) -> Configuration:
    """Read the configuration off a cubic bipartite graph of girth >= 6.

    ``points`` chooses which colour class (of the deterministic
    bipartition) plays the role of points.
    """
    g.require_cubic()
    bp = bipartition(g)
    if bp is None:
        raise NoBipartition("graph is not bipartite")
    if girth(g) < 6:
        raise GirthTooSmall("two points lie on two common lines (4-circuit)")
    pts = [v for v in range(g.vertex_count) if bp.side_of[v] == points]
    index = {v: i for i, v in enumerate(pts)}
    lines = [
        tuple(index[w] for w in g.adjacency[v])
        for v in range(g.vertex_count)
        if bp.side_of[v] != points
    ]
    return Configuration(len(pts), tuple(lines))


def cyclic_levi(n: int, b: int, c: int) -> Graph:
    return levi(cyclic_configuration(n, b, c))


def fano_configuration() -> Configuration:
    return cyclic_configuration(7, 1, 3)


def pappus_configuration() -> Configuration:
    """The affine plane of order 3 with one parallel class removed."""
    pts = {(x, y): 3 * x + y for x in range(3) for y in range(3)}
    lines = []
    for dx, dy in ((0, 1), (1, 1), (1, 2)):
        seen = set()
        for start in pts:
            ln = frozenset(((start[0] + t * dx) % 3, (start[1] + t * dy) % 3) for t in range(3))
            if ln not in seen:
                seen.add(ln)
                lines.append(tuple(pts[p] for p in ln))
    return Configuration(9, tuple(lines))


def desargues_configuration() -> Configuration:
    """Points: 2-subsets of a 5-set; lines: 3-subsets; incidence: containment."""
    pairs = list(itertools.combinations(range(5), 2))
    index = {p: i for i, p in enumerate(pairs)}
    lines = [
        tuple(index[p] for p in itertools.combinations(t, 2))
        for t in itertools.combinations(range(5), 3)
    ]
    return Configuration(10, tuple(lines))


def k33() -> Graph:
    return Graph(6, tuple((a, b) for a in range(3) for b in range(3, 6)))


def heawood() -> Graph:
    return cyclic_levi(7, 1, 3)


def pappus() -> Graph:
    """18-circuit v1..v18 with nine chords (drawn as a regular 18-gon)."""
    chords = [(1, 6), (2, 9), (3, 14), (4, 11), (5, 16), (7, 12), (8, 15), (10, 17), (13, 18)]
    edges = [(i, (i + 1) % 18) for i in range(18)]
    edges += [(a - 1, b - 1) for a, b in chords]
    return Graph(18, tuple(edges), tuple(f"v{i}" for i in range(1, 19)))


def circuit(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


# -- D(n) --------------------------------------------------------------------

_SEGMENT_NAMES = ("u_{i}^1", "u_{i}^2", "u_{i}^3", "u_{i}^4", "v_{i}^1", "v_{i}^2")


def _segment_chain_parts(m: int) -> tuple[list[str], list[tuple[str, str]]]:
    labels = [name.format(i=i) for i in range(1, m + 1) for name in _SEGMENT_NAMES]
    edges = []
    for i in range(1, m + 1):
        ring = [f"u_{i}^1", f"u_{i}^2", f"u_{i}^3", f"u_{i}^4", f"v_{i}^2", f"v_{i}^1"]
        edges += [(ring[k], ring[(k + 1) % 6]) for k in range(6)]
        if i >= 2:
            edges += [
                (f"v_{i-1}^1", f"u_{i}^1"),
                (f"v_{i-1}^2", f"u_{i}^4"),
                (f"u_{i-1}^3", f"u_{i}^2"),
            ]
    return labels, edges


def segment_chain(m: int) -> Graph:
    """The chain C(m) of m hexagonal segments."""
    if m < 1:
        raise InvalidParameter("segment_chain needs m >= 1")
    return Graph.from_labeled_edges(*_segment_chain_parts(m))


def d_graph(n: int) -> Graph:
    """Levi graph of the cyclic configuration with base line {0,1,3}, built
    segment-wise with the closing vertices and edges for each residue of n."""
    if n < 7:
        raise InvalidParameter("D(n) is defined here for n >= 7")
    r = n % 3
    m = (n - r) // 3
    labels, edges = _segment_chain_parts(m)
    if r == 0:
        edges += [(f"u_1^1", f"v_{m}^1"), (f"u_1^4", f"v_{m}^2"), (f"u_1^2", f"u_{m}^3")]
    elif r == 1:
        w1, w2 = f"w_{m}^1", f"w_{m}^2"
        labels += [w1, w2]
        edges += [
            ("u_1^1", w1), ("u_1^2", f"v_{m}^2"), ("u_1^4", w2),
            (w1, w2), (w1, f"u_{m}^3"), (w2, f"v_{m}^1"),
        ]
    else:
        w1, w2, w3, w4 = (f"w_{m}^{k}" for k in range(1, 5))
        labels += [w1, w2, w3, w4]
        edges += [
            (f"v_{m}^1", w1), (f"v_{m}^2", w4), (f"u_{m}^3", w2),
            ("u_1^1", w4), ("u_1^2", w1), ("u_1^4", w3),
            (w1, w2), (w2, w3), (w3, w4),
        ]
    return Graph.from_labeled_edges(labels, edges)


# -- T_1(n), T_2(n), T_3(n) ----------------------------------------------------

T_SEGMENT_VERTICES = (
    "u1", "u2", "u3", "w1", "w2", "w3", "x1", "x2", "x3",
    "y1", "y2", "y3", "z1", "z2", "z3", "t1", "t2", "v1", "v2", "v3",
)

# Bold path P^1 of the segment drawing followed by its eight thin edges.
T_SEGMENT_EDGES = (
    ("u2", "w1"), ("w1", "u1"), ("u1", "w2"), ("w2", "u3"), ("u3", "w3"),
    ("w3", "x3"), ("x3", "y3"), ("y3", "z3"), ("z3", "v3"), ("v3", "t2"),
    ("t2", "v1"), ("v1", "z1"), ("z1", "y2"), ("y2", "x2"), ("x2", "t1"),
    ("t1", "x1"), ("x1", "y1"), ("y1", "z2"), ("z2", "v2"),
    ("w1", "x1"), ("y1", "z1"), ("u2", "w3"), ("w2", "x2"),
    ("y2", "z3"), ("y3", "z2"), ("x3", "t1"), ("v2", "t2"),
)

T_CLOSURES = {
    1: ((1, 1), (2, 2), (3, 3)),
    2: ((3, 1), (2, 2), (1, 3)),
    3: ((1, 3), (2, 1), (3, 2)),
}


def _t_label(short: str, i: int) -> str:
    return f"{short[0]}_{i}^{short[1]}"


def _t_parts(n: int) -> tuple[list[str], list[tuple[str, str]]]:
    labels = [_t_label(s, i) for i in range(1, n + 1) for s in T_SEGMENT_VERTICES]
    edges = []
    for i in range(1, n + 1):
        edges += [(_t_label(a, i), _t_label(b, i)) for a, b in T_SEGMENT_EDGES]
        if i >= 2:
            edges += [(f"v_{i-1}^{j}", f"u_{i}^{j}") for j in (1, 2, 3)]
    return labels, edges


def t_segment() -> Graph:
    """The 20-vertex segment graph with index 1."""
    return Graph.from_labeled_edges(*_t_parts(1))


def t_graph(n: int, variant: int) -> Graph:
    if n < 1:
        raise InvalidParameter("t_graph needs n >= 1")
    if variant not in T_CLOSURES:
        raise InvalidParameter("variant must be 1, 2 or 3")
    labels, edges = _t_parts(n)
    edges += [(f"u_1^{a}", f"v_{n}^{b}") for a, b in T_CLOSURES[variant]]
    return Graph.from_labeled_edges(labels, edges)


# -- star product ---------------------------------------------------------------

def star_product_with_cut(
    g1: Graph, x: int, g2: Graph, y: int, pairing: Sequence[int] = (0, 1, 2)
) -> tuple[Graph, frozenset[int]]:
    """Star product and the edge indices of its three joining edges.

    ``pairing[k]`` is the position (in sorted order) of the neighbour of ``y``
    joined to the k-th smallest neighbour of ``x``.
    """
    for g in (g1, g2):
        if not g.is_cubic():
            raise NotCubic("star product needs cubic factors")
    if sorted(pairing) != [0, 1, 2]:
        raise InvalidParameter(f"pairing {tuple(pairing)} is not a permutation of (0, 1, 2)")
    keep1 = [v for v in range(g1.vertex_count) if v != x]
    keep2 = [v for v in range(g2.vertex_count) if v != y]
    new1 = {v: i for i, v in enumerate(keep1)}
    new2 = {v: len(keep1) + i for i, v in enumerate(keep2)}
    edges = [(new1[a], new1[b]) for a, b in g1.edges if x not in (a, b)]
    edges += [(new2[a], new2[b]) for a, b in g2.edges if y not in (a, b)]
    nx_, ny_ = g1.adjacency[x], g2.adjacency[y]
    joins = [(new1[nx_[k]], new2[ny_[pairing[k]]]) for k in range(3)]
    labels = tuple(f"a:{g1.name(v)}" for v in keep1) + tuple(f"b:{g2.name(v)}" for v in keep2)
    g = Graph(len(keep1) + len(keep2), tuple(edges + joins), labels)
    if (bipartition(g1) is not None and bipartition(g2) is not None) and bipartition(g) is None:
        raise BipartitenessBroken("the joining edges cannot be 2-coloured consistently")
    cut = frozenset(g.edge_id(a, b) for a, b in joins)
    return g, cut


def star_product(g1: Graph, x: int, g2: Graph, y: int, pairing: Sequence[int] = (0, 1, 2)) -> Graph:
    return star_product_with_cut(g1, x, g2, y, pairing)[0]


def heawood_star_heawood(pairing: Sequence[int] = (0, 1, 2)) -> tuple[Graph, frozenset[int]]:
    h = heawood()
    return star_product_with_cut(h, 0, h, 0, pairing)


PAIRINGS = tuple(itertools.permutations(range(3)))


def is_levi_graph(g: Graph) -> bool:
    """Cubic, bipartite, girth >= 6 and connected."""
    return (
        g.is_cubic()
        and bipartition(g) is not None
        and girth(g) >= 6
        and len(components(g)) == 1
    )


def build_family(family: str, n: int | None = None, variant: int | None = None, base=None) -> Graph:
    """Dispatch used by the command line ``gen`` command."""
    family = family.lower()
    if family == "k33":
        return k33()
    if family == "heawood":
        return heawood()
    if family == "pappus":
        return pappus()
    if family == "desargues":
        return levi(desargues_configuration())
    if family in ("d", "t", "cyclic", "chain") and n is None:
        raise InvalidParameter(f"family {family!r} needs --n")
    if family == "d":
        return d_graph(n)
    if family == "chain":
        return segment_chain(n)
    if family == "t":
        return t_graph(n, variant if variant is not None else 1)
    if family == "cyclic":
        b = base if base is not None else (0, 1, 3)
        if len(b) != 3 or b[0] != 0:
            raise InvalidParameter("base line must look like 0,b,c")
        return cyclic_levi(n, b[1], b[2])
    if family == "star":
        return heawood_star_heawood()[0]
    raise InvalidParameter(f"unknown family {family!r}")
