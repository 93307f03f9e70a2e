"""Immutable simple graphs and the basic structural predicates."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from levi.errors import NotCubic, NotSimple, NotTwoRegular

BLACK = 0
WHITE = 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..vertex_count-1``.

    Edges are stored as ``(min, max)`` pairs sorted lexicographically, so an
    edge's index is determined by the edge set alone.  ``labels`` is an
    optional sidecar of unique symbolic vertex names.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise NotSimple("negative vertex count")
        norm = []
        for a, b in self.edges:
            if a == b:
                raise NotSimple(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise NotSimple(f"edge ({a}, {b}) out of range for {n} vertices")
            norm.append((a, b) if a < b else (b, a))
        norm.sort()
        for i in range(1, len(norm)):
            if norm[i] == norm[i - 1]:
                raise NotSimple(f"duplicate edge {norm[i]}")
        object.__setattr__(self, "edges", tuple(norm))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != n:
                raise NotSimple(f"{len(labels)} labels for {n} vertices")
            if len(set(labels)) != n:
                raise NotSimple("labels are not unique")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> Graph:
        return cls(n, tuple((int(a), int(b)) for a, b in edges), labels)

    @classmethod
    def from_labeled_edges(cls, labels: Sequence[str], edges: Iterable[tuple[str, str]]) -> Graph:
        index = {name: i for i, name in enumerate(labels)}
        return cls(len(labels), tuple((index[a], index[b]) for a, b in edges), tuple(labels))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(x)) for x in adj)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Incident edge indices per vertex, in increasing index order."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for k, (a, b) in enumerate(self.edges):
            inc[a].append(k)
            inc[b].append(k)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def label_index(self) -> dict[str, int]:
        if self.labels is None:
            return {}
        return {name: i for i, name in enumerate(self.labels)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edge_index

    def edge_id(self, a: int, b: int) -> int:
        return self.edge_index[(a, b) if a < b else (b, a)]

    def vertex(self, label: str) -> int:
        try:
            return self.label_index[label]
        except KeyError:
            raise KeyError(f"no vertex labelled {label!r}") from None

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_regular(self, k: int) -> bool:
        return all(len(a) == k for a in self.adjacency)

    def is_cubic(self) -> bool:
        return self.is_regular(3)

    def require_cubic(self) -> None:
        for v, a in enumerate(self.adjacency):
            if len(a) != 3:
                raise NotCubic(f"vertex {v} has degree {len(a)}")

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        labels = None
        if self.labels is not None:
            new = [""] * self.vertex_count
            for v, p in enumerate(perm):
                new[p] = self.labels[v]
            labels = tuple(new)
        return Graph(self.vertex_count, tuple((perm[a], perm[b]) for a, b in self.edges), labels)

    def without_edges(self, drop: Iterable[int]) -> Graph:
        drop = set(drop)
        kept = tuple(e for k, e in enumerate(self.edges) if k not in drop)
        return Graph(self.vertex_count, kept, self.labels)


@dataclass(frozen=True)
class Bipartition:
    side_of: tuple[int, ...]

    @property
    def black(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side_of) if s == BLACK)

    @property
    def white(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side_of) if s == WHITE)

    def flipped(self) -> Bipartition:
        return Bipartition(tuple(1 - s for s in self.side_of))


@dataclass(frozen=True)
class EdgeCut:
    edges: frozenset[int]
    smaller_side_vertex_count: int

    @property
    def trivial(self) -> bool:
        return self.smaller_side_vertex_count == 1


@dataclass(frozen=True)
class CircuitDecomposition:
    circuits: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.circuits))

    def __len__(self) -> int:
        return len(self.circuits)


@dataclass(frozen=True)
class Path:
    """Vertex sequence; a circuit when the first vertex is repeated at the end."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def is_circuit(self) -> bool:
        return len(self.vertices) > 2 and self.vertices[0] == self.vertices[-1]

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def distinct(self) -> tuple[int, ...]:
        return self.vertices[:-1] if self.is_circuit else self.vertices

    def __len__(self) -> int:
        return len(self.distinct())

    def edge_ids(self, g: Graph) -> list[int]:
        vs = self.vertices
        return [g.edge_id(vs[k], vs[k + 1]) for k in range(len(vs) - 1)]


def components(g: Graph, dropped: frozenset[int] | set[int] = frozenset()) -> list[list[int]]:
    """Connected components (ignoring the edge indices in ``dropped``)."""
    seen = [False] * g.vertex_count
    comps = []
    inc, edges = g.incidence, g.edges
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for k in inc[v]:
                if k in dropped:
                    continue
                a, b = edges[k]
                w = b if a == v else a
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.vertex_count <= 1 or len(components(g)) == 1


def bipartition(g: Graph) -> Bipartition | None:
    """2-colouring with the lowest vertex of each component Black, or None."""
    side = [-1] * g.vertex_count
    adj = g.adjacency
    for s in range(g.vertex_count):
        if side[s] >= 0:
            continue
        side[s] = BLACK
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return Bipartition(tuple(side))


def girth(g: Graph) -> float:
    """Length of a shortest circuit, or ``math.inf`` for a forest."""
    best = math.inf
    adj = g.adjacency
    n = g.vertex_count
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def decompose(g: Graph, edge_subset: Iterable[int], spanning: bool = True) -> CircuitDecomposition:
    """Split a 2-regular edge subset into circuits.

    Each circuit starts at its smallest vertex and continues towards the
    smaller of its two neighbours; circuits are sorted by first vertex.
    With ``spanning=False`` vertices untouched by the subset are allowed.
    """
    n = g.vertex_count
    nbrs: list[list[int]] = [[] for _ in range(n)]
    edges = g.edges
    for k in edge_subset:
        a, b = edges[k]
        nbrs[a].append(b)
        nbrs[b].append(a)
    for v in range(n):
        d = len(nbrs[v])
        if d != 2 and (spanning or d != 0):
            raise NotTwoRegular(v, d)
    seen = [False] * n
    circuits = []
    for s in range(n):
        if seen[s] or not nbrs[s]:
            continue
        prev, cur = s, min(nbrs[s])
        cycle = [s]
        seen[s] = True
        while cur != s:
            seen[cur] = True
            cycle.append(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        circuits.append(tuple(cycle))
    return CircuitDecomposition(tuple(circuits))


def circuit_count(g: Graph, edge_subset: Iterable[int]) -> int:
    """Number of circuits of a spanning 2-regular subset (no validation)."""
    n = g.vertex_count
    nb1 = [-1] * n
    nb2 = [-1] * n
    for k in edge_subset:
        a, b = g.edges[k]
        if nb1[a] < 0:
            nb1[a] = b
        else:
            nb2[a] = b
        if nb1[b] < 0:
            nb1[b] = a
        else:
            nb2[b] = a
    seen = bytearray(n)
    count = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        prev, cur = s, nb1[s]
        seen[s] = 1
        while cur != s:
            seen[cur] = 1
            nxt = nb2[cur] if nb1[cur] == prev else nb1[cur]
            prev, cur = cur, nxt
    return count
