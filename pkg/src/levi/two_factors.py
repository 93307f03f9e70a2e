"""Perfect matchings and 2-factors of cubic graphs.

In a cubic graph the 2-factors are exactly the complements of perfect
matchings, so every census here is driven by one matching enumerator.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from levi.errors import DisconnectedInput, NotPerfectMatching
from levi.graph import CircuitDecomposition, Graph, decompose, is_connected

FULL = "full"
PARITY = "parity"
DEFAULT_FULL_BUDGET = 10_000_000


@dataclass(frozen=True)
class EnumBudget:
    max_matchings: int | None = DEFAULT_FULL_BUDGET
    mode: str = FULL

    def __post_init__(self):
        if self.mode not in (FULL, PARITY):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.max_matchings is not None and self.max_matchings < 1:
            raise ValueError("max_matchings must be positive")

    @classmethod
    def full(cls, max_matchings: int | None = DEFAULT_FULL_BUDGET) -> EnumBudget:
        return cls(max_matchings, FULL)

    @classmethod
    def parity(cls, max_matchings: int | None = None) -> EnumBudget:
        return cls(max_matchings, PARITY)


@dataclass(frozen=True)
class EnumSummary:
    count: int
    truncated: bool  # a matching beyond the budget exists
    stopped: bool  # the visitor asked to stop


class _Stop(Exception):
    pass


def _search(
    g: Graph,
    on_match: Callable[[tuple[int, ...]], bool | None],
    root_branches: Sequence[int] | None = None,
) -> bool:
    """Depth-first matching search; returns True if ``on_match`` stopped it.

    Branches on the lowest uncovered vertex, trying its available edges in
    index order.  After each choice, vertices left with one available edge
    are matched along it and vertices left with none prune the branch.
    ``root_branches`` restricts the first branching point to the listed
    positions among its available edges.
    """
    n = g.vertex_count
    edges, inc = g.edges, g.incidence
    matched = bytearray(n)
    avail = [len(inc[v]) for v in range(n)]
    chosen: list[int] = []

    def other(k: int, v: int) -> int:
        a, b = edges[k]
        return b if a == v else a

    def take(k: int, forced: list[int]) -> bool:
        a, b = edges[k]
        matched[a] = matched[b] = 1
        chosen.append(k)
        ok = True
        for x in (a, b):
            for f in inc[x]:
                y = other(f, x)
                if not matched[y]:
                    avail[y] -= 1
                    if avail[y] == 0:
                        ok = False
                    elif avail[y] == 1:
                        forced.append(y)
        return ok

    def undo(mark: int) -> None:
        while len(chosen) > mark:
            k = chosen.pop()
            a, b = edges[k]
            for x in (b, a):
                for f in inc[x]:
                    y = other(f, x)
                    if not matched[y]:
                        avail[y] += 1
            matched[a] = matched[b] = 0

    def propagate(forced: list[int]) -> bool:
        while forced:
            y = forced.pop()
            if matched[y]:
                continue
            for f in inc[y]:
                if not matched[other(f, y)]:
                    break
            else:
                return False
            if not take(f, forced):
                return False
        return True

    def branch(start: int, restrict: Sequence[int] | None) -> None:
        v = start
        while v < n and matched[v]:
            v += 1
        if v == n:
            if on_match(tuple(sorted(chosen))):
                raise _Stop
            return
        options = [k for k in inc[v] if not matched[other(k, v)]]
        if restrict is not None:
            options = [options[p] for p in restrict if p < len(options)]
        for k in options:
            mark = len(chosen)
            forced: list[int] = []
            if take(k, forced) and propagate(forced):
                branch(v + 1, None)
            undo(mark)

    if any(a == 0 for a in avail):
        return False
    forced = [v for v in range(n) if avail[v] == 1]
    try:
        if propagate(forced):
            branch(0, root_branches)
    except _Stop:
        return True
    return False


def enumerate_perfect_matchings(
    g: Graph,
    visitor: Callable[[tuple[int, ...]], bool | None] | None = None,
    budget: EnumBudget | None = None,
) -> EnumSummary:
    """Visit each perfect matching once, as a sorted tuple of edge indices.

    The visitor may return True to stop early.  With a finite budget the
    enumeration stops after ``max_matchings`` visits; ``truncated`` reports
    whether a further matching exists.
    """
    limit = budget.max_matchings if budget is not None else None
    count = 0
    truncated = False

    def on_match(m: tuple[int, ...]) -> bool:
        nonlocal count, truncated
        if limit is not None and count >= limit:
            truncated = True
            return True
        count += 1
        return bool(visitor(m)) if visitor is not None else False

    stopped = _search(g, on_match)
    return EnumSummary(count, truncated, stopped and not truncated)


def perfect_matchings(g: Graph) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    enumerate_perfect_matchings(g, out.append)
    return out


@dataclass(frozen=True)
class TwoFactor:
    edges: tuple[int, ...]
    decomposition: CircuitDecomposition

    @property
    def circuit_count(self) -> int:
        return len(self.decomposition.circuits)

    @property
    def parity(self) -> str:
        return "odd" if self.circuit_count % 2 else "even"

    @property
    def lengths(self) -> tuple[int, ...]:
        return self.decomposition.lengths


def two_factor_of(g: Graph, matching: Iterable[int]) -> TwoFactor:
    m = set(matching)
    covered = Counter()
    for k in m:
        a, b = g.edges[k]
        covered[a] += 1
        covered[b] += 1
    if any(covered[v] != 1 for v in range(g.vertex_count)) or len(covered) != g.vertex_count:
        raise NotPerfectMatching("edge set does not cover every vertex exactly once")
    rest = tuple(k for k in range(g.edge_count) if k not in m)
    return TwoFactor(rest, decompose(g, rest))


def two_factor_from_edges(g: Graph, edges: Iterable[int]) -> TwoFactor:
    edges = tuple(sorted(set(edges)))
    return TwoFactor(edges, decompose(g, edges))


@dataclass
class _Census:
    total: int = 0
    by_count: Counter = field(default_factory=Counter)
    by_lengths: Counter = field(default_factory=Counter)
    first_odd: tuple[int, ...] | None = None
    first_even: tuple[int, ...] | None = None

    def add(self, g: Graph, m: tuple[int, ...]) -> None:
        tf = two_factor_of(g, m)
        self.total += 1
        self.by_count[tf.circuit_count] += 1
        self.by_lengths[tf.lengths] += 1
        if tf.circuit_count % 2:
            if self.first_odd is None:
                self.first_odd = m
        elif self.first_even is None:
            self.first_even = m

    def merge(self, other: _Census) -> None:
        self.total += other.total
        self.by_count.update(other.by_count)
        self.by_lengths.update(other.by_lengths)
        if self.first_odd is None:
            self.first_odd = other.first_odd
        if self.first_even is None:
            self.first_even = other.first_even


@dataclass(frozen=True)
class ClassificationReport:
    graph: str
    vertices: int
    edges: int
    mode: str
    status: str  # "exact", "early_exit" or "inconclusive"
    total_two_factors: int
    by_circuit_count: dict[int, int]
    by_lengths: dict[tuple[int, ...], int]
    has_two_factor: bool | None
    two_factor_hamiltonian: bool | None
    two_factor_isomorphic: bool | None
    pseudo_two_factor_isomorphic: bool | None
    witness_pair: tuple[TwoFactor, TwoFactor] | None

    @property
    def inconclusive(self) -> bool:
        return self.status == "inconclusive"

    def flags(self) -> dict[str, bool | None]:
        return {
            "has_two_factor": self.has_two_factor,
            "two_factor_hamiltonian": self.two_factor_hamiltonian,
            "two_factor_isomorphic": self.two_factor_isomorphic,
            "pseudo_two_factor_isomorphic": self.pseudo_two_factor_isomorphic,
        }

    def to_json(self) -> dict:
        witnesses = []
        if self.witness_pair is not None:
            witnesses = [list(tf.edges) for tf in self.witness_pair]
        return {
            "graph": self.graph,
            "vertices": self.vertices,
            "edges": self.edges,
            "mode": self.mode,
            "status": self.status,
            "total_two_factors": self.total_two_factors,
            "by_circuit_count": {str(k): v for k, v in sorted(self.by_circuit_count.items())},
            "by_circuit_lengths": {
                " ".join(map(str, k)): v for k, v in sorted(self.by_lengths.items())
            },
            "flags": self.flags(),
            "witnesses": witnesses,
        }


def _graph_id(g: Graph) -> str:
    from levi.io import to_graph6

    return to_graph6(g).decode()


def _subtree_census(g: Graph, branch: int, limit: int | None) -> tuple[_Census, bool]:
    census = _Census()
    over = False

    def visit(m):
        nonlocal over
        if limit is not None and census.total >= limit:
            over = True
            return True
        census.add(g, m)
        return False

    _search(g, visit, [branch])
    return census, over


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("LEVI_THREADS", "1")))
    except ValueError:
        return 1


def _report(g, mode, status, census: _Census) -> ClassificationReport:
    counts = census.by_count
    pair = None
    if census.first_odd is not None and census.first_even is not None:
        pair = (two_factor_of(g, census.first_odd), two_factor_of(g, census.first_even))
    if status == "inconclusive":
        has = True if census.total else None
        hamiltonian = False if any(c != 1 for c in counts) else None
        iso = False if len(census.by_lengths) > 1 else None
        pseudo = False if pair is not None else None
    elif status == "early_exit":
        has, hamiltonian, iso, pseudo = True, False, False, False
    else:
        has = census.total > 0
        hamiltonian = has and set(counts) == {1}
        iso = has and len(census.by_lengths) == 1
        pseudo = has and len({c % 2 for c in counts}) == 1
    return ClassificationReport(
        graph=_graph_id(g),
        vertices=g.vertex_count,
        edges=g.edge_count,
        mode=mode,
        status=status,
        total_two_factors=census.total,
        by_circuit_count=dict(sorted(counts.items())),
        by_lengths=dict(sorted(census.by_lengths.items())),
        has_two_factor=has,
        two_factor_hamiltonian=hamiltonian,
        two_factor_isomorphic=iso,
        pseudo_two_factor_isomorphic=pseudo,
        witness_pair=pair,
    )


def classify(g: Graph, budget: EnumBudget | None = None, threads: int | None = None) -> ClassificationReport:
    """Census of the 2-factors of a connected cubic graph.

    Full mode counts every 2-factor (subject to the budget).  Parity mode
    stops as soon as both parities of circuit count have been seen.  The
    witness pair is the first odd and the first even 2-factor in
    enumeration order.  ``threads > 1`` splits Full mode over the first
    branching level in worker processes; results are merged in branch order
    and are identical to the serial run.
    """
    g.require_cubic()
    if not is_connected(g):
        raise DisconnectedInput("classify needs a connected graph")
    budget = budget or EnumBudget.full()
    threads = _default_threads() if threads is None else max(1, threads)
    limit = budget.max_matchings

    if budget.mode == FULL and threads > 1 and g.vertex_count > 0:
        branches = range(g.degree(0))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_subtree_census, [g] * len(branches), branches, [limit] * len(branches)))
        census = _Census()
        for part, _over in parts:
            census.merge(part)
        if limit is None or (census.total <= limit and not any(o for _, o in parts)):
            return _report(g, FULL, "exact", census)
        # the budget cut falls inside some subtree: use the reference order
    census = _Census()
    over = False

    def visit(m):
        nonlocal over
        if limit is not None and census.total >= limit:
            over = True
            return True
        census.add(g, m)
        if budget.mode == PARITY and census.first_odd is not None and census.first_even is not None:
            return True
        return False

    stopped = _search(g, visit)
    if over:
        status = "inconclusive"
    elif stopped:
        status = "early_exit"
    else:
        status = "exact"
    return _report(g, budget.mode, status, census)


def find_parity_witnesses(g: Graph) -> tuple[TwoFactor, TwoFactor] | None:
    """First odd and first even 2-factor, or None if all parities agree."""
    return classify(g, EnumBudget.parity(), threads=1).witness_pair
