"""Canonical labelling by colour refinement and individualisation.

The search explores the individualise-refine tree, keeps the leaf whose
relabelled edge list is lexicographically smallest, and prunes sibling
branches with the automorphisms discovered so far (two leaves with equal
relabelled graphs differ by an automorphism).
"""

from __future__ import annotations

from dataclasses import dataclass

from levi.graph import Graph


def _rank(sigs: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def refine(adj, colors: list[int]) -> list[int]:
    """Coarsest equitable refinement; colour names depend only on structure."""
    classes = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        new = _rank(sigs)
        new_classes = len(set(new))
        if new_classes == classes:
            return new
        colors, classes = new, new_classes


def _individualize(colors: list[int], v: int) -> list[int]:
    return _rank([(c, 0 if u == v else 1) for u, c in enumerate(colors)])


@dataclass(frozen=True)
class CanonicalResult:
    certificate: bytes
    labeling: tuple[int, ...]  # vertex -> canonical position
    automorphisms: tuple[tuple[int, ...], ...]


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adjacency
        self.best_key = None
        self.best_lab = None
        self.autos: list[tuple[int, ...]] = []

    def key(self, lab: list[int]):
        return tuple(sorted((min(lab[a], lab[b]), max(lab[a], lab[b])) for a, b in self.g.edges))

    def leaf(self, lab: list[int]) -> None:
        k = self.key(lab)
        if self.best_key is None or k < self.best_key:
            self.best_key, self.best_lab = k, lab
        elif k == self.best_key:
            # best_lab^-1 o lab maps this leaf onto the best one
            inv = [0] * len(lab)
            for v, p in enumerate(self.best_lab):
                inv[p] = v
            sigma = tuple(inv[lab[v]] for v in range(len(lab)))
            if any(sigma[v] != v for v in range(len(sigma))):
                self.autos.append(sigma)

    def orbit_rep(self, v: int, fixed: tuple[int, ...], explored: list[int]) -> bool:
        """True when ``v`` is an image of an explored sibling under known
        automorphisms fixing the current path pointwise."""
        gens = [a for a in self.autos if all(a[f] == f for f in fixed)]
        if not gens or not explored:
            return False
        reach = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for a in gens:
                y = a[x]
                if y not in reach:
                    reach.add(y)
                    stack.append(y)
        return any(e in reach for e in explored)

    def run(self, colors: list[int], path: tuple[int, ...]) -> None:
        colors = refine(self.adj, colors)
        n = len(colors)
        if len(set(colors)) == n:
            self.leaf(colors)
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        explored: list[int] = []
        for v in cell:
            if self.orbit_rep(v, path, explored):
                continue
            explored.append(v)
            self.run(_individualize(colors, v), path + (v,))


def _encode(n: int, key) -> bytes:
    body = ",".join(f"{a}-{b}" for a, b in key)
    return f"{n}:{body}".encode()


def canonical(g: Graph) -> CanonicalResult:
    n = g.vertex_count
    if n == 0:
        return CanonicalResult(b"0:", (), ())
    search = _Search(g)
    search.run([0] * n, ())
    return CanonicalResult(_encode(n, search.best_key), tuple(search.best_lab), tuple(search.autos))


def canonical_form(g: Graph) -> bytes:
    return canonical(g).certificate


def isomorphism(g1: Graph, g2: Graph) -> tuple[int, ...] | None:
    """A bijection ``phi`` with ``phi[v]`` in g2 for v in g1, or None."""
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    c1, c2 = canonical(g1), canonical(g2)
    if c1.certificate != c2.certificate:
        return None
    inv2 = [0] * g2.vertex_count
    for v, p in enumerate(c2.labeling):
        inv2[p] = v
    return tuple(inv2[c1.labeling[v]] for v in range(g1.vertex_count))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return isomorphism(g1, g2) is not None
