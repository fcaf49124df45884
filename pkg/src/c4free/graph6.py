"""
graph6 encoding: bit-packed upper adjacency triangle, printable ASCII at
offset 63. Covers the standard size header for n < 2^36 (we only ever need
n <= 64, but the long forms cost nothing).
"""

from __future__ import annotations

from .graph import Graph, GraphError


def encode(g: Graph) -> str:
    bits = []
    for v in range(g.n):
        for u in range(v):
            bits.append(g.rows[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return _encode_n(g.n) + "".join(chars)


def decode(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    n, body = _decode_n(s)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body length {len(body)}, expected {need} for n={n}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphError(f"invalid graph6 character {ch!r}")
        bits.extend(val >> k & 1 for k in range(5, -1, -1))
    edges = []
    i = 0
    for v in range(n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)


def _encode_n(n: int) -> str:
    if n < 0:
        raise GraphError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("order too large for graph6")


def _decode_n(s: str) -> tuple[int, str]:
    if not s:
        raise GraphError("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, s[1:]
    if len(s) >= 2 and s[1] != "~":
        vals = [ord(c) - 63 for c in s[1:4]]
        return vals[0] << 12 | vals[1] << 6 | vals[2], s[4:]
    vals = [ord(c) - 63 for c in s[2:8]]
    n = 0
    for v in vals:
        n = n << 6 | v
    return n, s[8:]
