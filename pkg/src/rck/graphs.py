"""Small immutable graphs on up to 32 labeled vertices.

Vertices are integers 0..n-1 and every vertex set is a bit mask, so the
primitives below (cliques, chromatic number, complement, join) reduce to
mask arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_VERTICES = 32
CHROMATIC_MAX_VERTICES = 16

# An edge is a pair (u, v) with u < v; a vertex set is a bit mask.
Edge = tuple[int, int]
VertexSet = int


def bits(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adj[v] is the neighbor mask of vertex v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has neighbors outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise ValueError(f"vertex {v} is adjacent to itself")
        for u in range(self.n):
            row = self.adj[u]
            for v in bits(row >> (u + 1) << (u + 1)):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[Edge]:
        """All edges (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def non_edges(self) -> list[Edge]:
        """All non-adjacent pairs (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    out.append((u, v))
        return out

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2


def _check_edge(g: Graph, e: Edge) -> Edge:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise ValueError(f"edge {e} out of range for a graph on {g.n} vertices")
    return (u, v) if u < v else (v, u)


def from_edges(n: int, edges) -> Graph:
    """Build a graph on n vertices from an iterable of (u, v) pairs."""
    adj = [0] * n
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad edge ({u}, {v}) for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite_graph(parts) -> Graph:
    """Complete multipartite graph with the given part sizes, parts in order."""
    parts = list(parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    n = sum(parts)
    offsets = []
    start = 0
    for p in parts:
        offsets.append((start, p))
        start += p
    full = (1 << n) - 1
    adj = []
    for start, p in offsets:
        own = ((1 << p) - 1) << start
        for v in range(start, start + p):
            adj.append(full & ~own)
    return Graph(n, tuple(adj))


def add_edge(g: Graph, e: Edge) -> Graph:
    """Return g plus the non-edge e; g itself is unchanged."""
    u, v = _check_edge(g, e)
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def remove_edge(g: Graph, e: Edge) -> Graph:
    """Return g minus the edge e; g itself is unchanged."""
    u, v = _check_edge(g, e)
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n)))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus all cross edges; g's vertices come first."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"join has {n} > {MAX_VERTICES} vertices")
    h_block = ((1 << h.n) - 1) << g.n
    g_block = (1 << g.n) - 1
    adj = [g.adj[v] | h_block for v in range(g.n)]
    adj += [(h.adj[v] << g.n) | g_block for v in range(h.n)]
    return Graph(n, tuple(adj))


def induced_subgraph(g: Graph, within: VertexSet) -> Graph:
    """Subgraph induced by the vertex mask, relabeled to 0..k-1 in mask order."""
    verts = list(bits(within & g.full_mask))
    if not verts:
        raise ValueError("induced subgraph must keep at least one vertex")
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        for w in bits(g.adj[v] & within):
            adj[i] |= 1 << pos[w]
    return Graph(len(verts), tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return induced_subgraph(g, g.full_mask & ~(1 << v))


def degree_stats(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """Return (min degree, max degree, per-vertex degree tuple)."""
    degs = tuple(m.bit_count() for m in g.adj)
    return min(degs), max(degs), degs


def _max_clique(adj, cand: int, size: int, best: int) -> int:
    while cand:
        if size + cand.bit_count() <= best:
            return best
        v = (cand & -cand).bit_length() - 1
        cand ^= 1 << v
        if size + 1 > best:
            best = size + 1
        best = _max_clique(adj, cand & adj[v], size + 1, best)
    return best


def clique_number(g: Graph) -> int:
    """Exact clique number by branch and bound over neighbor masks."""
    return _max_clique(g.adj, g.full_mask, 0, 0)


def mask_has_clique(adj, cand: int, need: int) -> bool:
    """True iff the vertices of cand contain a clique of size need (K_0 always)."""
    if need <= 0:
        return True
    if need == 1:
        return cand != 0
    while cand:
        if cand.bit_count() < need:
            return False
        v = (cand & -cand).bit_length() - 1
        cand ^= 1 << v
        if mask_has_clique(adj, cand & adj[v], need - 1):
            return True
    return False


def has_clique(g: Graph, t: int, within: VertexSet | None = None) -> bool:
    """True iff the subgraph induced by within (default: all of g) contains K_t."""
    if t < 1:
        raise ValueError("clique size must be at least 1")
    mask = g.full_mask if within is None else within & g.full_mask
    return mask_has_clique(g.adj, mask, t)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number; branch and bound, vertices in max-degree order."""
    if g.n > CHROMATIC_MAX_VERTICES:
        raise ValueError(
            f"chromatic_number supports at most {CHROMATIC_MAX_VERTICES} vertices"
        )
    n = g.n
    lower = clique_number(g)
    order = sorted(range(n), key=lambda v: (-g.adj[v].bit_count(), v))
    # Greedy upper bound along the same order.
    color = [0] * n
    upper = 0
    for v in order:
        used = 0
        for w in bits(g.adj[v]):
            if color[w]:
                used |= 1 << color[w]
        c = 1
        while used >> c & 1:
            c += 1
        color[v] = c
        upper = max(upper, c)
    if lower == upper:
        return lower

    best = upper
    assign = [0] * n
    adj = g.adj

    def down(i: int, used: int) -> None:
        nonlocal best
        if used >= best or best == lower:
            return
        if i == n:
            best = used
            return
        v = order[i]
        forbidden = 0
        for w in bits(adj[v]):
            if assign[w]:
                forbidden |= 1 << assign[w]
        limit = min(used + 1, best - 1)
        for c in range(1, limit + 1):
            if not forbidden >> c & 1:
                assign[v] = c
                down(i + 1, used if c <= used else c)
                assign[v] = 0

    down(0, 0)
    return best


def is_complete_multipartite(g: Graph) -> tuple[bool, int]:
    """True (with part count) iff the complement is a disjoint union of cliques."""
    co = complement(g)
    seen = 0
    parts = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        # Component of v in the complement.
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= co.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        for w in bits(comp):
            if (co.adj[w] | (1 << w)) & comp != comp:
                return False, 0
        seen |= comp
        parts += 1
    return True, parts


def relabel(g: Graph, perm) -> Graph:
    """Relabel g; perm[v] is the new label of vertex v."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertices")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for w in bits(g.adj[v]):
            row |= 1 << perm[w]
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj))
