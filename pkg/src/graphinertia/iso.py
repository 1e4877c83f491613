"""Isomorphism, induced-subgraph search and canonical codes for small graphs."""

from __future__ import annotations

from typing import Optional

from . import kernels
from .errors import UnsupportedOrder
from .graph import Graph, induced_subgraph, iter_bits

ISOMORPHIC_MAX_ORDER = 10
PATTERN_MAX_ORDER = 16


def _profile(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[u] for u in iter_bits(g.adj[v])))) for v in range(g.order)]


def find_isomorphism(a: Graph, b: Graph) -> Optional[list[int]]:
    """Return ``m`` with a-vertex ``v`` mapped to b-vertex ``m[v]``, or None.

    Candidates must agree on degree and on the multiset of neighbor degrees;
    adjacency to already-mapped vertices is checked as the map grows.
    """
    if a.order != b.order or a.edge_count != b.edge_count:
        return None
    pa, pb = _profile(a), _profile(b)
    if sorted(pa) != sorted(pb):
        return None
    n = a.order
    # map the most constrained vertices first: rare profiles, then high degree
    freq: dict = {}
    for prof in pb:
        freq[prof] = freq.get(prof, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[pa[v]], -pa[v][0], v))
    mapping = [-1] * n
    used = 0

    def extend(idx: int) -> bool:
        nonlocal used
        if idx == n:
            return True
        v = order[idx]
        for w in range(n):
            if used >> w & 1 or pb[w] != pa[v]:
                continue
            ok = True
            for u in order[:idx]:
                if (a.adj[v] >> u & 1) != (b.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(idx + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    return list(mapping) if extend(0) else None


def isomorphic(a: Graph, b: Graph) -> bool:
    if max(a.order, b.order) > ISOMORPHIC_MAX_ORDER:
        raise UnsupportedOrder(f"isomorphic() handles order <= {ISOMORPHIC_MAX_ORDER}")
    return find_isomorphism(a, b) is not None


def contains_induced(host: Graph, pattern: Graph) -> Optional[list[int]]:
    """A vertex set of ``host`` inducing a copy of ``pattern``, or None.

    Pattern vertex ``i`` is matched to ``result[i]``; the list is returned in
    pattern order (sort it for the plain vertex subset).
    """
    if pattern.order > PATTERN_MAX_ORDER:
        raise UnsupportedOrder(f"pattern order must be <= {PATTERN_MAX_ORDER}")
    if pattern.order > host.order:
        return None
    k = pattern.order
    if k == 0:
        return []
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    order = sorted(range(k), key=lambda v: (-pdeg[v], v))
    image = [-1] * k
    used = 0

    def extend(idx: int) -> bool:
        nonlocal used
        if idx == k:
            return True
        v = order[idx]
        for w in range(host.order):
            if used >> w & 1 or hdeg[w] < pdeg[v]:
                continue
            ok = True
            for u in order[:idx]:
                if (pattern.adj[v] >> u & 1) != (host.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(idx + 1):
                return True
            used &= ~(1 << w)
        return False

    return list(image) if extend(0) else None


def canonical_code(g: Graph) -> int:
    """Isomorphism-complete integer code (order <= 11)."""
    if g.order > kernels.CODE_MAX_ORDER:
        raise UnsupportedOrder(f"canonical codes need order <= {kernels.CODE_MAX_ORDER}")
    return kernels.canonical_code(g.adj, g.order)


def graph_from_code(order: int, code: int) -> Graph:
    return Graph(order, tuple(kernels.rows_from_code(order, code)))


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(g.order, canonical_code(g))


def induced_copy(host: Graph, pattern: Graph) -> Optional[Graph]:
    found = contains_induced(host, pattern)
    return None if found is None else induced_subgraph(host, found)
