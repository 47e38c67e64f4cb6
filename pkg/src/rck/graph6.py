"""graph6 codec: printable ASCII lines for small undirected graphs.

One graph per line.  The first byte is 63+n (n <= 62).  The upper triangle
of the adjacency matrix follows in column order x(0,1), x(0,2), x(1,2),
x(0,3), ..., padded with zero bits to a multiple of 6, each 6-bit group
stored as its value plus 63.
"""

from __future__ import annotations

from .graphs import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    out = [chr(63 + n)]
    word = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            word = (word << 1) | (g.adj[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + word))
                word = 0
                nbits = 0
    if nbits:
        word <<= 6 - nbits
        out.append(chr(63 + word))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Parse one graph6 line; strict about length, padding, and size limits."""
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise ValueError("empty graph6 line")
    first = ord(text[0])
    if first == 126:
        raise ValueError("multi-byte graph6 sizes exceed the 32-vertex limit")
    n = first - 63
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"graph6 vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    body = text[1:]
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise ValueError(
            f"graph6 body has {len(body)} bytes, expected {expect} for n={n}"
        )
    adj = [0] * n
    idx = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"invalid graph6 byte {ch!r}")
        for k in range(5, -1, -1):
            bit = val >> k & 1
            if idx < nbits:
                if bit:
                    u, v = _pair_at(idx, n)
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            elif bit:
                raise ValueError("nonzero padding bits in graph6 line")
            idx += 1
    return Graph(n, tuple(adj))


def _pair_at(idx: int, n: int) -> tuple[int, int]:
    # Index into the column-major upper triangle.
    v = 1
    while idx >= v:
        idx -= v
        v += 1
    return idx, v


def iter_graph6(lines):
    """Yield graphs from an iterable of lines, skipping blanks."""
    for line in lines:
        text = line.strip()
        if not text:
            continue
        yield parse_graph6(text)
