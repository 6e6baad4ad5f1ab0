"""graph6 and plain edge-list serialization."""

from __future__ import annotations

import numpy as np

from .graphs import Graph, GraphMeta

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in range(30, -6, -6)])
    raise ValueError("n too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed)."""
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ValueError("truncated graph6 size")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise ValueError("truncated graph6 size")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def to_graph6(g: Graph) -> str:
    """Encode in graph6: size prefix then the upper triangle packed 6 bits per byte."""
    n = g.n
    out = bytearray(_encode_n(n))
    bits = []
    for j in range(1, n):
        bits.extend(g.adj[:j, j].tolist())
    acc = 0
    k = 0
    for b in bits:
        acc = (acc << 1) | int(b)
        k += 1
        if k == 6:
            out.append(acc + 63)
            acc = k = 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return out.decode("ascii")


def from_graph6(text: str, meta: GraphMeta | None = None) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    data = s.encode("ascii")
    n, used = _decode_n(data)
    body = data[used:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise ValueError("graph6 body too short")
    if any(b < 63 or b > 126 for b in body[:need]):
        raise ValueError("invalid graph6 byte")
    bits = np.zeros(need * 6, dtype=bool)
    for i, b in enumerate(body[:need]):
        v = b - 63
        for k in range(6):
            bits[6 * i + k] = (v >> (5 - k)) & 1
    a = np.zeros((n, n), dtype=bool)
    pos = 0
    for j in range(1, n):
        a[:j, j] = bits[pos:pos + j]
        pos += j
    a |= a.T
    return Graph(a, meta)


def write_graph6(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(to_graph6(g) + "\n")


def read_graph6(path, meta: GraphMeta | None = None) -> Graph:
    """Read the first graph from a graph6 file."""
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                return from_graph6(line, meta)
    raise ValueError(f"no graph in {path}")


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{g.n}\n")
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def read_edge_list(path) -> Graph:
    """Read "n" on the first line then one "u v" pair per line, 0-indexed."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"empty edge list file {path}")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Graph.from_edge_list(n, edges)
