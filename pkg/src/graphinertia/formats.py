"""graph6 text encoding and DOT export."""

from __future__ import annotations

from .errors import InvalidArgument
from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(InvalidArgument):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.order):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chunks = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        chunks.append(chr(value + 63))
    return _encode_order(g.order) + "".join(chunks)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + pos)
    if s[0] == "~":
        if len(s) < 4:
            raise Graph6Error("truncated order field", base + len(s))
        if s[1] == "~":
            raise Graph6Error("orders above 258047 are not supported", base + 1)
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    else:
        n = ord(s[0]) - 63
        pos = 1
    if n > 64:
        raise Graph6Error(f"order {n} exceeds the supported maximum of 64", base)
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = s[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for order {n}, found {len(body)}",
            base + pos + min(len(body), need),
        )
    bits = []
    for ch in body:
        value = ord(ch) - 63
        bits.extend(value >> (5 - t) & 1 for t in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("non-zero padding bits", base + len(s) - 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.order))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
