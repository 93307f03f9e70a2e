"""Martinetti extension and reduction as rewrites of Levi graphs.

Points are the Black class of the deterministic bipartition unless
``points=WHITE`` is passed.  An extension site is a pair of point-line
edges ``(x1, y1)``, ``(x2, y2)`` whose points share no line and whose lines
share no point; the rewrite drops both edges and adds a new line ``u`` on
``x1, x2`` and a new point ``v`` on ``y1, y2, u``.  A reduction undoes this
at an edge ``uv`` (``u`` a line, ``v`` a point).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from levi.canon import canonical_form
from levi.errors import InvalidReduction, InvalidSite, NoBipartition, PostconditionViolated
from levi.graph import BLACK, Graph, bipartition, components, girth

STRAIGHT = "straight"
CROSSED = "crossed"


@dataclass(frozen=True)
class ExtensionSite:
    e1: tuple[int, int]  # (point, line)
    e2: tuple[int, int]


@dataclass(frozen=True)
class ReductionSite:
    edge: tuple[int, int]  # (u, v) with u a line and v a point
    option: str
    x: tuple[int, int]  # other neighbours of u
    y: tuple[int, int]  # other neighbours of v
    after: bytes | None = None  # canonical certificate of the reduced graph

    def added_edges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        (x1, x2), (y1, y2) = self.x, self.y
        if self.option == STRAIGHT:
            return (x1, y1), (x2, y2)
        return (x1, y2), (x2, y1)


@dataclass(frozen=True)
class MartinettiMove:
    site: ExtensionSite | ReductionSite
    before: bytes
    after: bytes

    @property
    def kind(self) -> str:
        return "extend" if isinstance(self.site, ExtensionSite) else "reduce"


def _sides(g: Graph) -> tuple[int, ...]:
    bp = bipartition(g)
    if bp is None:
        raise NoBipartition("graph is not bipartite")
    return bp.side_of


def _require_levi(g: Graph) -> None:
    g.require_cubic()
    if girth(g) < 6:
        raise NoBipartition("not the Levi graph of a configuration (girth < 6)")


def _oriented_edges(g: Graph, side: tuple[int, ...], points: int) -> list[tuple[int, int]]:
    return [(a, b) if side[a] == points else (b, a) for a, b in g.edges]


def is_extension_site(g: Graph, s: ExtensionSite, points: int = BLACK) -> bool:
    side = _sides(g)
    (x1, y1), (x2, y2) = s.e1, s.e2
    if not (g.has_edge(x1, y1) and g.has_edge(x2, y2)):
        return False
    if side[x1] != points or side[x2] != points or x1 == x2 or y1 == y2:
        return False
    adj = g.adjacency
    return not set(adj[x1]) & set(adj[x2]) and not set(adj[y1]) & set(adj[y2])


def extension_sites(g: Graph, points: int = BLACK) -> list[ExtensionSite]:
    """Unordered site pairs, listed once with ``e1`` of smaller edge index."""
    _require_levi(g)
    side = _sides(g)
    oriented = _oriented_edges(g, side, points)
    nbr = [frozenset(a) for a in g.adjacency]
    sites = []
    for i, (x1, y1) in enumerate(oriented):
        for x2, y2 in oriented[i + 1 :]:
            if x1 == x2 or y1 == y2:
                continue
            if nbr[x1] & nbr[x2] or nbr[y1] & nbr[y2]:
                continue
            sites.append(ExtensionSite((x1, y1), (x2, y2)))
    return sites


def _check_levi(g: Graph) -> str | None:
    if not g.is_cubic():
        return "regularity"
    if bipartition(g) is None:
        return "bipartite"
    if girth(g) < 6:
        return "girth"
    return None


def extend(g: Graph, s: ExtensionSite, points: int = BLACK) -> Graph:
    if not is_extension_site(g, s, points):
        raise InvalidSite(f"{s} is not an extension site")
    (x1, y1), (x2, y2) = s.e1, s.e2
    n = g.vertex_count
    u, v = n, n + 1
    drop = {g.edge_id(x1, y1), g.edge_id(x2, y2)}
    edges = [e for k, e in enumerate(g.edges) if k not in drop]
    edges += [(x1, u), (x2, u), (y1, v), (y2, v), (u, v)]
    labels = None
    if g.labels is not None:
        labels = g.labels + (f"ext_line_{u}", f"ext_point_{v}")
    out = Graph(n + 2, tuple(edges), labels)
    problem = _check_levi(out)
    if problem:
        raise PostconditionViolated(f"extension result fails the {problem} check")
    return out


def _reduction_parts(g: Graph, u: int, v: int):
    xs = tuple(sorted(w for w in g.adjacency[u] if w != v))
    ys = tuple(sorted(w for w in g.adjacency[v] if w != u))
    return xs, ys


def _apply_reduction(g: Graph, s: ReductionSite, allow_disconnected: bool = False) -> Graph:
    u, v = s.edge
    if not g.has_edge(u, v):
        raise InvalidReduction("regularity", f"{s.edge} is not an edge")
    if _reduction_parts(g, u, v) != (tuple(sorted(s.x)), tuple(sorted(s.y))):
        raise InvalidReduction("regularity", "site neighbours do not match the graph")
    added = s.added_edges()
    for a, b in added:
        if g.has_edge(a, b):
            raise InvalidReduction("multi-edge", f"edge ({a}, {b}) already present")
    keep = [w for w in range(g.vertex_count) if w not in (u, v)]
    index = {w: i for i, w in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges if a not in (u, v) and b not in (u, v)]
    edges += [(index[a], index[b]) for a, b in added]
    labels = tuple(g.labels[w] for w in keep) if g.labels is not None else None
    out = Graph(len(keep), tuple(edges), labels)
    if not out.is_cubic():
        raise InvalidReduction("regularity", "result is not cubic")
    if girth(out) < 6:
        raise InvalidReduction("girth", "result has a circuit shorter than 6")
    if not allow_disconnected and len(components(out)) > 1:
        raise InvalidReduction("disconnected", "result is disconnected")
    return out


def reduce(g: Graph, s: ReductionSite, allow_disconnected: bool = False) -> Graph:
    return _apply_reduction(g, s, allow_disconnected)


def _candidate_reductions(g: Graph, points: int) -> Iterator[ReductionSite]:
    side = _sides(g)
    for a, b in g.edges:
        u, v = (a, b) if side[a] != points else (b, a)
        xs, ys = _reduction_parts(g, u, v)
        for option in (STRAIGHT, CROSSED):
            yield ReductionSite((u, v), option, xs, ys)


def iter_reductions(
    g: Graph, points: int = BLACK, allow_disconnected: bool = False
) -> Iterator[tuple[ReductionSite, Graph]]:
    _require_levi(g)
    for s in _candidate_reductions(g, points):
        try:
            yield s, _apply_reduction(g, s, allow_disconnected)
        except InvalidReduction:
            continue


def reduction_sites(
    g: Graph, points: int = BLACK, allow_disconnected: bool = False, certificates: bool = True
) -> list[ReductionSite]:
    """Valid reduction sites in edge order, Straight before Crossed."""
    out = []
    for s, reduced in iter_reductions(g, points, allow_disconnected):
        if certificates:
            s = ReductionSite(s.edge, s.option, s.x, s.y, canonical_form(reduced))
        out.append(s)
    return out


def is_irreducible(g: Graph, points: int = BLACK) -> bool:
    return next(iter_reductions(g, points), None) is None


def extensions_up_to_iso(g: Graph, points: int = BLACK) -> list[tuple[bytes, int]]:
    """Isomorphism classes of one-step extensions with their site counts,
    in order of first appearance."""
    classes: dict[bytes, int] = {}
    for s in extension_sites(g, points):
        cert = canonical_form(extend(g, s, points))
        classes[cert] = classes.get(cert, 0) + 1
    return list(classes.items())


def extension_representatives(g: Graph, points: int = BLACK) -> list[tuple[ExtensionSite, Graph, int]]:
    """One (site, extended graph, multiplicity) per isomorphism class."""
    reps: dict[bytes, list] = {}
    for s in extension_sites(g, points):
        h = extend(g, s, points)
        cert = canonical_form(h)
        if cert in reps:
            reps[cert][2] += 1
        else:
            reps[cert] = [s, h, 1]
    return [tuple(r) for r in reps.values()]


def extend_move(g: Graph, s: ExtensionSite, points: int = BLACK) -> tuple[Graph, MartinettiMove]:
    h = extend(g, s, points)
    return h, MartinettiMove(s, canonical_form(g), canonical_form(h))


def reduce_move(g: Graph, s: ReductionSite, allow_disconnected: bool = False) -> tuple[Graph, MartinettiMove]:
    h = reduce(g, s, allow_disconnected)
    return h, MartinettiMove(s, canonical_form(g), canonical_form(h))
