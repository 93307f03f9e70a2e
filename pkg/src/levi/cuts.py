"""Edge connectivity and non-trivial 3-edge-cuts."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from levi.errors import DisconnectedInput
from levi.graph import EdgeCut, Graph, components, is_connected


def _max_flow(g: Graph, s: int, t: int, cap: int) -> tuple[int, set[int]]:
    """Unit-capacity undirected max flow, stopping once ``cap`` is reached.

    Returns the flow value and the source side of a minimum cut (only
    meaningful when the value is below ``cap``).
    """
    # flow[k] is +1 when edge k carries a unit from edges[k][0] to edges[k][1]
    flow = [0] * g.edge_count
    edges, inc = g.edges, g.incidence
    value = 0
    while value < cap:
        prev = {s: None}
        queue = deque([s])
        while queue and t not in prev:
            v = queue.popleft()
            for k in inc[v]:
                a, b = edges[k]
                if a == v:
                    w, ok = b, flow[k] < 1
                else:
                    w, ok = a, flow[k] > -1
                if ok and w not in prev:
                    prev[w] = (v, k)
                    queue.append(w)
        if t not in prev:
            return value, set(prev)
        w = t
        while prev[w] is not None:
            v, k = prev[w]
            flow[k] += 1 if edges[k][0] == v else -1
            w = v
        value += 1
    return value, set()


def _cut_edges(g: Graph, side: set[int]) -> frozenset[int]:
    return frozenset(k for k, (a, b) in enumerate(g.edges) if (a in side) != (b in side))


def min_edge_cut(g: Graph) -> EdgeCut:
    """A minimum edge cut of a connected graph on at least two vertices."""
    if not is_connected(g):
        raise DisconnectedInput("graph is not connected")
    n = g.vertex_count
    cap = min(g.degree(v) for v in range(n))
    best = None
    for t in range(1, n):
        value, side = _max_flow(g, 0, t, cap)
        if value < cap and (best is None or value < best[0]):
            best = (value, side)
            cap = value
    if best is None:
        v = min(range(n), key=g.degree)
        side = {v}
    else:
        side = best[1]
    return EdgeCut(_cut_edges(g, side), min(len(side), n - len(side)))


def edge_connectivity(g: Graph) -> int:
    if g.vertex_count <= 1:
        return 0
    return len(min_edge_cut(g).edges)


def _bridges(g: Graph, dropped: set[int]) -> list[int]:
    """Bridges of ``g`` minus ``dropped`` (iterative lowpoint DFS)."""
    n = g.vertex_count
    edges, inc = g.edges, g.incidence
    disc = [-1] * n
    low = [0] * n
    found = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(inc[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for k in it:
                if k in dropped or k == via:
                    continue
                a, b = edges[k]
                w = b if a == v else a
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, k, iter(inc[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    found.append(via)
    return sorted(found)


@dataclass(frozen=True)
class Essential4EC:
    """Verdict of :func:`essential_4ec`; ``witness`` is set iff the answer is No."""

    yes: bool
    witness: EdgeCut | None = None

    def __bool__(self) -> bool:
        return self.yes


def _side_sizes(g: Graph, cut: set[int]) -> int:
    return min(len(c) for c in components(g, cut))


def essential_4ec(g: Graph) -> Essential4EC:
    """Is a connected cubic graph essentially 4-edge-connected?

    On No the witness is the lexicographically smallest non-trivial cut
    of at most three edges.  Triples are found as (pair, bridge of the pair's
    complement) instead of scanning all edge triples; the two agree because
    in a 3-edge-connected graph every 3-edge-cut is minimal.
    """
    g.require_cubic()
    cut = min_edge_cut(g)
    if len(cut.edges) < 3:
        return Essential4EC(False, cut)
    m = g.edge_count
    for i in range(m):
        for j in range(i + 1, m):
            for k in _bridges(g, {i, j}):
                if k <= j:
                    continue
                triple = {i, j, k}
                small = _side_sizes(g, triple)
                if small >= 2:
                    return Essential4EC(False, EdgeCut(frozenset(triple), small))
    return Essential4EC(True)


def nontrivial_three_cuts(g: Graph) -> list[frozenset[int]]:
    """Every non-trivial 3-edge-cut of a 3-edge-connected cubic graph."""
    g.require_cubic()
    out = []
    m = g.edge_count
    for i in range(m):
        for j in range(i + 1, m):
            for k in _bridges(g, {i, j}):
                if k > j and _side_sizes(g, {i, j, k}) >= 2:
                    out.append(frozenset((i, j, k)))
    return out
