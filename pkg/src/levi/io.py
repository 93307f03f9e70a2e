"""graph6 and plain edge-list serialisation."""

from __future__ import annotations

import re
from typing import Iterator

from levi.errors import ParseError
from levi.graph import Graph

GRAPH6_HEADER = b">>graph6<<"
_EDGELIST_HEAD = re.compile(rb"^\s*(\d+)\s+(\d+)\s*$")


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> bytes:
    """Header-less graph6 encoding (no trailing newline)."""
    n = g.vertex_count
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    offset = 0
    if data.startswith(GRAPH6_HEADER):
        offset = len(GRAPH6_HEADER)
    line = data[offset:].rstrip(b"\r\n")
    if not line:
        raise ParseError("empty graph6 string", offset)
    for k, ch in enumerate(line):
        if not 63 <= ch <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", offset + k)
    pos = 0
    if line[0] < 126:
        n = line[0] - 63
        pos = 1
    elif len(line) >= 2 and line[1] < 126:
        if len(line) < 4:
            raise ParseError("truncated vertex count", offset + len(line))
        n = sum((line[1 + k] - 63) << (12 - 6 * k) for k in range(3))
        pos = 4
    else:
        if len(line) < 8:
            raise ParseError("truncated vertex count", offset + len(line))
        n = sum((line[2 + k] - 63) << (30 - 6 * k) for k in range(6))
        pos = 8
    need_bits = n * (n - 1) // 2
    need = (need_bits + 5) // 6
    body = line[pos:]
    if len(body) != need:
        raise ParseError(
            f"expected {need} data bytes for {n} vertices, found {len(body)}",
            offset + pos + min(len(body), need),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges))


def to_edgelist(g: Graph) -> bytes:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return ("\n".join(lines) + "\n").encode()


def from_edgelist(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode()
    lines = data.split(b"\n")
    offsets = []
    pos = 0
    for line in lines:
        offsets.append(pos)
        pos += len(line) + 1
    rows = [(off, line) for off, line in zip(offsets, lines) if line.strip()]
    if not rows:
        raise ParseError("empty edge list", 0)
    off, head = rows[0]
    match = _EDGELIST_HEAD.match(head)
    if not match:
        raise ParseError("edge list header must be 'n m'", off)
    n, m = int(match[1]), int(match[2])
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(rows) - 1}", off)
    edges = []
    for off, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError("edge line must be 'u v'", off)
        a, b = int(parts[0]), int(parts[1])
        if a >= n or b >= n:
            raise ParseError(f"vertex out of range in edge ({a}, {b})", off)
        edges.append((a, b))
    try:
        return Graph(n, tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc), off) from None


def looks_like_edgelist(data: bytes) -> bool:
    first = next((ln for ln in data.split(b"\n") if ln.strip()), b"")
    return bool(_EDGELIST_HEAD.match(first))


def read_graphs(data: bytes, fmt: str | None = None) -> Iterator[Graph]:
    """Graphs in ``data``: one per graph6 line, or a single edge list."""
    if fmt is None:
        fmt = "edgelist" if looks_like_edgelist(data) else "graph6"
    if fmt == "edgelist":
        yield from_edgelist(data)
        return
    if fmt != "graph6":
        raise ValueError(f"unknown format {fmt!r}")
    pos = 0
    for line in data.split(b"\n"):
        stripped = line.strip()
        if stripped:
            try:
                yield from_graph6(stripped)
            except ParseError as exc:
                raise ParseError(str(exc).rsplit(" (byte", 1)[0], pos + exc.offset) from None
        pos += len(line) + 1


def read_graph(data: bytes, fmt: str | None = None) -> Graph:
    graphs = list(read_graphs(data, fmt))
    if len(graphs) != 1:
        raise ParseError(f"expected one graph, found {len(graphs)}", 0)
    return graphs[0]


def write_graph(g: Graph, fmt: str = "graph6") -> bytes:
    if fmt == "graph6":
        return to_graph6(g) + b"\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    raise ValueError(f"unknown format {fmt!r}")
