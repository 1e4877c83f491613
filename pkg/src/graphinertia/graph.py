"""Simple undirected graphs stored as bitmask adjacency rows, plus constructions.

Vertices are ``0 .. order-1``.  Row ``adj[i]`` is an ``int`` whose bit ``j``
is set iff ``i ~ j``.  Every graph is immutable; operations return new graphs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgument

MAX_ORDER = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.order <= MAX_ORDER:
            raise InvalidArgument(f"order must lie in 0..{MAX_ORDER}, got {self.order}")
        if len(self.adj) != self.order:
            raise InvalidArgument("need exactly one adjacency row per vertex")
        full = (1 << self.order) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidArgument(f"row {i} has bits beyond the vertex range")
            if row >> i & 1:
                raise InvalidArgument(f"loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise InvalidArgument(f"asymmetric adjacency between {i} and {j}")

    # construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidArgument(f"edge ({u}, {v}) out of range for order {order}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Graph:
        n = len(matrix)
        rows = []
        for i, line in enumerate(matrix):
            if len(line) != n:
                raise InvalidArgument("adjacency matrix must be square")
            rows.append(mask_of(j for j, a in enumerate(line) if a))
        return cls(n, tuple(rows))

    # queries ---------------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.order) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.order)] for row in self.adj]

    def is_clique(self, mask: int | None = None) -> bool:
        mask = self.vertex_mask if mask is None else mask
        return all(self.adj[v] & mask == mask & ~(1 << v) for v in iter_bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(not self.adj[v] & mask for v in iter_bits(mask))

    # derived graphs ----------------------------------------------------------

    def add_vertex(self, neighbors: Iterable[int]) -> Graph:
        """Append a vertex with the given neighborhood; it gets index ``order``."""
        nb = mask_of(neighbors)
        if nb & ~self.vertex_mask:
            raise InvalidArgument("new vertex neighbors must be existing vertices")
        n = self.order
        rows = [row | (1 << n) if nb >> i & 1 else row for i, row in enumerate(self.adj)]
        rows.append(nb)
        return Graph(n + 1, tuple(rows))

    def delete_vertices(self, vertices: Iterable[int]) -> Graph:
        drop = mask_of(vertices)
        return induced_subgraph(self, [v for v in range(self.order) if not drop >> v & 1])

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.order, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise InvalidArgument("relabelling must be a permutation of the vertices")
        rows = [0] * self.order
        for v, row in enumerate(self.adj):
            rows[perm[v]] = mask_of(perm[u] for u in iter_bits(row))
        return Graph(self.order, tuple(rows))

    def __add__(self, other: Graph) -> Graph:
        return disjoint_union(self, other)

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edges()})"


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.order
    return Graph(offset, tuple(rows))


# ---------------------------------------------------------------------------
# standard families


def complete(n: int) -> Graph:
    return complete_multipartite([1] * n) if n else Graph(0, ())


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidArgument("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(r: int) -> Graph:
    """K_{1,r} with the center at vertex 0."""
    return Graph.from_edges(r + 1, [(0, i) for i in range(1, r + 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """K_{n_1,...,n_l}: parts are consecutive blocks, adjacent iff in different blocks."""
    if not parts:
        raise InvalidArgument("need at least one part")
    if any(p < 1 for p in parts):
        raise InvalidArgument(f"parts must be positive, got {list(parts)}")
    n = sum(parts)
    full = (1 << n) - 1
    rows = []
    start = 0
    for p in parts:
        block = ((1 << p) - 1) << start
        rows.extend([full & ~block] * p)
        start += p
    return Graph(n, tuple(rows))


def gn_layout(n: int) -> tuple[list[int], list[int]]:
    """Vertex indices of the V-clique and W-clique of G_n (V first, then W)."""
    half_v = (n + 1) // 2
    return list(range(half_v)), list(range(half_v, n))


def gn(n: int) -> Graph:
    """The two-clique graph G_n with nested cross neighborhoods.

    Vertices ``0..ceil(n/2)-1`` are v_1, v_2, ... and the rest are w_1, w_2, ...
    With s = floor(n/2), v_i ~ w_j exactly when i + j >= s + 2, which gives
    N_W(v_1) = {} and each N_W(v_{i+1}) adds the next lower-indexed w; for
    odd n the extra vertex v_{s+1} sees all of W.
    """
    if n < 2:
        raise InvalidArgument(f"G_n is defined for n >= 2, got {n}")
    vs, ws = gn_layout(n)
    s = len(ws)
    edges = list(combinations(vs, 2)) + list(combinations(ws, 2))
    for i, v in enumerate(vs, start=1):
        for j, w in enumerate(ws, start=1):
            if i + j >= s + 2:
                edges.append((v, w))
    return Graph.from_edges(n, edges)


def lex_product(base: Graph, sizes: Sequence[int]) -> Graph:
    """Generalized lexicographic product base[K_{t_1}, ..., K_{t_m}].

    Vertex j of ``base`` becomes a clique of ``sizes[j]`` consecutive vertices.
    """
    if len(sizes) != base.order:
        raise InvalidArgument(f"need {base.order} sizes, got {len(sizes)}")
    if any(t < 1 for t in sizes):
        raise InvalidArgument("clique sizes must be positive")
    starts = []
    total = 0
    for t in sizes:
        starts.append(total)
        total += t
    if total > MAX_ORDER:
        raise InvalidArgument(f"product order {total} exceeds {MAX_ORDER}")
    blocks = [((1 << t) - 1) << s for t, s in zip(sizes, starts)]
    rows = []
    for j, t in enumerate(sizes):
        outside = 0
        for i in iter_bits(base.adj[j]):
            outside |= blocks[i]
        for a in range(t):
            rows.append(outside | (blocks[j] & ~(1 << (starts[j] + a))))
    return Graph(total, tuple(rows))


_BK_RE = re.compile(r"B_?\{?(\d+)\}?\(([^()]*)\)")


@dataclass(frozen=True)
class BkSpec:
    """B_k(n_1, ..., n_k) = G_k[K_{n_1}, ..., K_{n_k}] in half-block notation.

    ``parts`` follows the written order: the first s entries expand v_1..v_s,
    the next s expand w_1..w_s and, for odd k, the last one expands v_{s+1}.
    """

    k: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if not 2 <= self.k <= MAX_ORDER:
            raise InvalidArgument(f"k must lie in 2..{MAX_ORDER}, got {self.k}")
        if len(self.parts) != self.k:
            raise InvalidArgument(f"B_{self.k} needs {self.k} parts, got {len(self.parts)}")
        if any(p < 1 for p in self.parts):
            raise InvalidArgument("every part must be at least 1")

    @classmethod
    def of(cls, *parts: int) -> BkSpec:
        return cls(len(parts), tuple(parts))

    @classmethod
    def parse(cls, text: str) -> BkSpec:
        """Read ``B5(2,2;2,2;1)``; whitespace is ignored and ``B_5`` is accepted."""
        m = _BK_RE.fullmatch(re.sub(r"\s+", "", text))
        if m is None:
            raise InvalidArgument(f"not a B_k spec: {text!r}")
        k = int(m.group(1))
        blocks = [b.split(",") for b in m.group(2).split(";")]
        try:
            parts = tuple(int(x) for b in blocks for x in b)
        except ValueError:
            raise InvalidArgument(f"bad part list in {text!r}") from None
        want = [k // 2, k // 2] + ([1] if k % 2 else [])
        if [len(b) for b in blocks] != want:
            raise InvalidArgument(f"B_{k} is written with blocks of sizes {want}")
        return cls(k, parts)

    @property
    def order(self) -> int:
        return sum(self.parts)

    @property
    def s(self) -> int:
        return self.k // 2

    def halves(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        s = self.s
        return self.parts[:s], self.parts[s:2 * s], self.parts[2 * s:]

    def swapped(self) -> BkSpec:
        a, b, rest = self.halves()
        return BkSpec(self.k, b + a + rest)

    def vertex_sizes(self) -> list[int]:
        """Clique sizes in G_k vertex order (v_1..v_ceil, w_1..w_s)."""
        a, b, rest = self.halves()
        return list(a) + list(rest) + list(b)

    def __str__(self):
        a, b, rest = self.halves()
        blocks = [",".join(map(str, a)), ",".join(map(str, b))]
        if rest:
            blocks.append(str(rest[0]))
        return f"B{self.k}(" + "; ".join(blocks) + ")"


def realize_bk(spec: BkSpec) -> Graph:
    return lex_product(gn(spec.k), spec.vertex_sizes())


def k_joining(r: int, inner: Graph, attach: Iterable[int]) -> Graph:
    """K_{1,r}(u) joined to ``attach`` vertices of ``inner``.

    Layout: center u is vertex 0, the leaves are 1..r, and ``inner`` follows.
    """
    if r < 1:
        raise InvalidArgument("the star needs at least one leaf")
    attach = sorted(set(attach))
    if not attach:
        raise InvalidArgument("attach set must be non-empty")
    if attach[0] < 0 or attach[-1] >= inner.order:
        raise InvalidArgument("attach vertices must belong to the inner graph")
    g = disjoint_union(star(r), inner)
    rows = list(g.adj)
    for a in attach:
        rows[0] |= 1 << (r + 1 + a)
        rows[r + 1 + a] |= 1
    return Graph(g.order, tuple(rows))


# ---------------------------------------------------------------------------
# structural queries


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph on ``s``; vertices are renumbered in ascending original order."""
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.order:
            raise InvalidArgument(f"vertex {v} out of range for order {g.order}")
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        rows.append(mask_of(index[u] for u in iter_bits(g.adj[v]) if u in index))
    return Graph(len(verts), tuple(rows))


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, in order of their smallest vertex."""
    seen = 0
    comps = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(iter_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def min_degree(g: Graph) -> int:
    if g.order == 0:
        raise InvalidArgument("empty graph has no minimum degree")
    return min(g.degrees())


def pendant_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.order) if g.degree(v) == 1]


# ---------------------------------------------------------------------------
# rho-classes (adjacent closed twins) and the canonical quotient


@dataclass(frozen=True)
class CanonicalDecomposition:
    canonical: Graph
    class_sizes: tuple[int, ...]
    representatives: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def reconstruct(self) -> Graph:
        return lex_product(self.canonical, self.class_sizes)

    def blockwise_order(self) -> list[int]:
        """Original vertices listed in the block order used by :meth:`reconstruct`."""
        return [v for cls in self.classes for v in cls]


def canonical_decomposition(g: Graph) -> CanonicalDecomposition:
    """Collapse each class of u rho v (u ~ v and N[u] = N[v]) to one vertex.

    Classes are listed by their smallest vertex, which is also the representative.
    """
    closed = [row | (1 << v) for v, row in enumerate(g.adj)]
    label = [-1] * g.order
    classes: list[tuple[int, ...]] = []
    for v in range(g.order):
        if label[v] >= 0:
            continue
        members = [u for u in range(v, g.order) if label[u] < 0 and closed[u] == closed[v]]
        for u in members:
            label[u] = len(classes)
        classes.append(tuple(members))
    reps = tuple(c[0] for c in classes)
    quotient = induced_subgraph(g, reps)
    return CanonicalDecomposition(quotient, tuple(len(c) for c in classes), reps, tuple(classes))
