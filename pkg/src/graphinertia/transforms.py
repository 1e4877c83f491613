"""The three congruent vertex transformations and their inertia certificates.

Adding a congruent vertex keeps p and n and raises the nullity by one.  Every
certificate here is backed by two exact inertia computations, not by trust in
that fact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import InternalError, InvalidArgument
from .graph import Graph, iter_bits
from .spectra import Inertia, inertia_exact


class TransformKind(str, Enum):
    I = "I"
    II = "II"
    III = "III"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TransformCertificate:
    kind: TransformKind
    witness: tuple[int, ...]
    before: Inertia
    after: Inertia

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "witness": list(self.witness),
            "before": list(self.before),
            "after": list(self.after),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def _check_vertex(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < g.order:
            raise InvalidArgument(f"vertex {v} is not in a graph of order {g.order}")


def _bit(v: int) -> int:
    return 1 << v


# ---------------------------------------------------------------------------
# detection


def is_type1_pair(g: Graph, u: int, v: int) -> bool:
    return u != v and not g.has_edge(u, v) and g.adj[u] == g.adj[v]


def find_type1(g: Graph) -> list[tuple[int, int]]:
    """Non-adjacent pairs with equal open neighborhoods, ascending."""
    return [(u, v) for u, v in combinations(range(g.order), 2) if is_type1_pair(g, u, v)]


def is_type2_triple(g: Graph, u: int, v: int, w: int) -> bool:
    if len({u, v, w}) < 3 or not g.is_independent(_bit(u) | _bit(v) | _bit(w)):
        return False
    a, nv, nw = g.adj[u], g.adj[v], g.adj[w]
    return nv & nw == 0 and a == nv | nw


def find_type2(g: Graph) -> list[tuple[int, int, int]]:
    """Triples (u, v, w), v < w, with {u, v, w} independent and N(u) = N(v) + N(w) disjointly."""
    out = []
    for u in range(g.order):
        for v, w in combinations(range(g.order), 2):
            if u != v and u != w and is_type2_triple(g, u, v, w):
                out.append((u, v, w))
    return out


def is_congruent_quadrangle(g: Graph, u: int, v: int, x: int, y: int) -> bool:
    """Induced cycle u-v-x-y-u with N(u)-{v,y} = N(v)-{u,x} and N(x)-{y,v} = N(y)-{x,u}."""
    if len({u, v, x, y}) < 4:
        return False
    adj = g.adj
    if not (adj[u] >> v & 1 and adj[v] >> x & 1 and adj[x] >> y & 1 and adj[y] >> u & 1):
        return False
    if adj[u] >> x & 1 or adj[v] >> y & 1:
        return False
    return (adj[u] & ~(_bit(v) | _bit(y)) == adj[v] & ~(_bit(u) | _bit(x))
            and adj[x] & ~(_bit(y) | _bit(v)) == adj[y] & ~(_bit(x) | _bit(u)))


def _symmetries(q: tuple[int, int, int, int]) -> list[tuple[int, int, int, int]]:
    # the conditions pair the edges uv and xy; these relabelings preserve them
    u, v, x, y = q
    return [(u, v, x, y), (v, u, y, x), (x, y, u, v), (y, x, v, u)]


def find_type3(g: Graph) -> list[tuple[int, int, int, int]]:
    """Congruent quadrangles, each reported once in its least equivalent labeling."""
    found = set()
    n = g.order
    for u in range(n):
        for v in iter_bits(g.adj[u]):
            for x in iter_bits(g.adj[v]):
                if x == u:
                    continue
                for y in iter_bits(g.adj[x] & g.adj[u]):
                    if y != v and is_congruent_quadrangle(g, u, v, x, y):
                        found.add(min(_symmetries((u, v, x, y))))
    return sorted(found)


def congruent_kinds(g: Graph, u: int) -> dict[TransformKind, tuple[int, ...]]:
    """For each kind, one witness in which ``u`` plays the removable vertex."""
    _check_vertex(g, u)
    out: dict[TransformKind, tuple[int, ...]] = {}
    for v in range(g.order):
        if is_type1_pair(g, u, v):
            out[TransformKind.I] = (u, v)
            break
    for v, w in combinations(range(g.order), 2):
        if u not in (v, w) and is_type2_triple(g, u, v, w):
            out[TransformKind.II] = (u, v, w)
            break
    for v in iter_bits(g.adj[u]):
        if TransformKind.III in out:
            break
        for y in iter_bits(g.adj[u]):
            if y == v:
                continue
            for x in iter_bits(g.adj[v] & g.adj[y]):
                if x != u and is_congruent_quadrangle(g, u, v, x, y):
                    out[TransformKind.III] = (u, v, x, y)
                    break
            if TransformKind.III in out:
                break
    return out


# ---------------------------------------------------------------------------
# certified addition and deletion


def _certify(kind: TransformKind, witness: tuple[int, ...], small: Graph, big: Graph,
             adding: bool) -> TransformCertificate:
    a, b = inertia_exact(small), inertia_exact(big)
    if (a.p, a.n_neg, a.eta + 1) != tuple(b):
        raise InternalError(f"{kind}-type vertex changed inertia {a} -> {b}")
    return TransformCertificate(kind, witness, a, b) if adding else TransformCertificate(kind, witness, b, a)


def add_type1(g: Graph, v: int) -> tuple[Graph, TransformCertificate]:
    """Add u with N(u) = N(v); u gets index ``g.order``."""
    _check_vertex(g, v)
    h = g.add_vertex(iter_bits(g.adj[v]))
    return h, _certify(TransformKind.I, (g.order, v), g, h, True)


def add_type2(g: Graph, v: int, w: int) -> tuple[Graph, TransformCertificate]:
    """Add u with N(u) = N(v) + N(w) for non-adjacent v, w with disjoint neighborhoods."""
    _check_vertex(g, v, w)
    if v == w:
        raise InvalidArgument("v and w must differ")
    if g.has_edge(v, w):
        raise InvalidArgument("v and w must be non-adjacent")
    if g.adj[v] & g.adj[w]:
        raise InvalidArgument("N(v) and N(w) must be disjoint")
    v, w = min(v, w), max(v, w)
    h = g.add_vertex(iter_bits(g.adj[v] | g.adj[w]))
    return h, _certify(TransformKind.II, (g.order, v, w), g, h, True)


def add_type3(g: Graph, v: int, x: int, y: int) -> tuple[Graph, TransformCertificate]:
    """Close the path v-x-y into a congruent quadrangle u-v-x-y with a new vertex u.

    u is joined to v, y and N(v) - {x}.  The quadrangle conditions are checked
    on the enlarged graph; if they fail nothing is added.
    """
    _check_vertex(g, v, x, y)
    if len({v, x, y}) < 3:
        raise InvalidArgument("v, x, y must be distinct")
    if not (g.has_edge(v, x) and g.has_edge(x, y)) or g.has_edge(v, y):
        raise InvalidArgument("need v ~ x, x ~ y and v not adjacent to y")
    if g.adj[x] & ~(_bit(y) | _bit(v)) != g.adj[y] & ~_bit(x):
        raise InvalidArgument("N(x) - {y, v} must equal N(y) - {x}")
    nbrs = (g.adj[v] & ~_bit(x)) | _bit(y) | _bit(v)
    h = g.add_vertex(iter_bits(nbrs))
    u = g.order
    if not is_congruent_quadrangle(h, u, v, x, y):
        raise InvalidArgument(f"u-{v}-{x}-{y} is not a congruent quadrangle after insertion")
    return h, _certify(TransformKind.III, (u, v, x, y), g, h, True)


def delete_congruent(g: Graph, u: int, kind: TransformKind | str) -> tuple[Graph, TransformCertificate]:
    """Remove a congruent vertex ``u`` of the stated kind."""
    kind = TransformKind(kind)
    witness = congruent_kinds(g, u).get(kind)
    if witness is None:
        raise InvalidArgument(f"vertex {u} is not a congruent vertex of {kind}-type")
    h = g.delete_vertices([u])
    return h, _certify(kind, witness, h, g, False)
