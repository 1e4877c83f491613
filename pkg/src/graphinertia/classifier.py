"""Membership tests and certified matchers for the p = 2 graph classes.

H holds the graphs with p = 2 and eta = 0, G those with p = 2 and eta = 1.
A connected member of G either has a pendant vertex, or loses one congruent
vertex to land in H, or blows up some G_k (4 <= k <= 13) by cliques.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Optional

from .enumerator import dedup_key
from .errors import InvalidArgument
from .graph import (BkSpec, Graph, canonical_decomposition, components, gn, gn_layout,
                    induced_subgraph, is_connected, iter_bits, mask_of, min_degree,
                    pendant_vertices)
from .iso import find_isomorphism
from .spectra import Inertia, inertia_exact
from .transforms import TransformCertificate, TransformKind, delete_congruent, congruent_kinds

BK_RANGE = range(4, 14)


def in_H(g: Graph, inertia: Optional[Inertia] = None) -> bool:
    i = inertia or inertia_exact(g)
    return i.p == 2 and i.eta == 0


def in_G(g: Graph, inertia: Optional[Inertia] = None) -> bool:
    i = inertia or inertia_exact(g)
    return i.p == 2 and i.eta == 1


def split_G(g: Graph) -> str:
    if not in_G(g):
        raise InvalidArgument("graph is not in G (need p = 2 and eta = 1)")
    if not is_connected(g):
        return "G_minus"
    return "G_plus" if pendant_vertices(g) else "G_star"


# ---------------------------------------------------------------------------
# shape recognizers


def _missing_edges(g: Graph, vs: list[int]) -> int:
    m = len(vs)
    present = sum(bin(g.adj[v] & mask_of(vs)).count("1") for v in vs) // 2
    return m * (m - 1) // 2 - present


def is_clique_minus_edge(g: Graph, vs: Optional[list[int]] = None) -> bool:
    vs = list(range(g.order)) if vs is None else vs
    return len(vs) >= 2 and _missing_edges(g, vs) == 1


def multipartite_parts(g: Graph) -> Optional[list[int]]:
    """Part sizes if ``g`` is complete multipartite (non-adjacency is an equivalence)."""
    seen = 0
    parts = []
    full = g.vertex_mask
    for v in range(g.order):
        if seen >> v & 1:
            continue
        part = full & ~g.adj[v]
        for u in iter_bits(part):
            if g.adj[u] != g.adj[v]:
                return None
        parts.append(bin(part).count("1"))
        seen |= part
    return parts


# ---------------------------------------------------------------------------
# disconnected members


def check_theorem_disconnected(g: Graph) -> Optional[str]:
    """Which disconnected shape ``g`` has: K_s+K_t+K_1, H+K_1 or K_s+K_{n-s}\\e.

    The match is purely structural (the H+K_1 case asks that the big
    component lie in H); it agrees with membership in G.
    """
    if g.order < 5:
        raise InvalidArgument("the disconnected characterization needs order >= 5")
    comps = components(g)
    if len(comps) < 2:
        raise InvalidArgument("graph is connected")
    sizes = sorted(len(c) for c in comps)
    if len(comps) == 3 and sizes[0] == 1 and sizes[1] >= 2:
        if all(g.is_clique(mask_of(c)) for c in comps):
            return "K_s+K_t+K_1"
    if len(comps) == 2:
        a, b = sorted(comps, key=len)
        if len(a) == 1 and in_H(induced_subgraph(g, b)):
            return "H+K_1"
        for c, d in ((a, b), (b, a)):
            if len(c) >= 2 and g.is_clique(mask_of(c)) and len(d) >= 3 and is_clique_minus_edge(g, d):
                return "K_s+K_{n-s}\\e"
    return None


# ---------------------------------------------------------------------------
# members with a pendant vertex


@dataclass(frozen=True)
class PendantForm:
    """G = K_{1,r}(u) joined at ``attach`` to K_{parts}; vertices in original labels."""

    center: int
    leaves: tuple[int, ...]
    parts: tuple[int, ...]
    attach: tuple[int, ...]
    d: int
    shape: Optional[str]

    def as_dict(self) -> dict[str, Any]:
        return {"center": self.center, "r": len(self.leaves), "leaves": list(self.leaves),
                "parts": list(self.parts), "attach": list(self.attach), "d": self.d,
                "shape": self.shape}


def match_pendant_form(g: Graph) -> Optional[PendantForm]:
    """Write ``g`` as K_{1,r}(u) joined to a complete multipartite graph, if possible.

    The nullity predicted by the form is d = r + sum(n_i) - (l + 1).
    """
    pend = pendant_vertices(g)
    if not pend or not is_connected(g):
        raise InvalidArgument("need a connected graph with a pendant vertex")
    for u in sorted({g.neighbors(v)[0] for v in pend}):
        leaves = tuple(v for v in pend if g.adj[v] == 1 << u)
        rest = [v for v in range(g.order) if v != u and v not in leaves]
        if not rest:
            continue
        parts = multipartite_parts(induced_subgraph(g, rest))
        attach = tuple(v for v in rest if g.has_edge(u, v))
        if parts is None or len(parts) < 2 or not attach:
            continue
        r, l = len(leaves), len(parts)
        d = r + sum(parts) - (l + 1)
        shape = None
        if d == 1 and r == 2:
            shape = "K_{1,2}(u)*K_{n-3}"
        elif d == 1 and r == 1:
            shape = "K_{1,1}(u)*(K_{n-2}\\e)"
        return PendantForm(u, leaves, tuple(sorted(parts, reverse=True)), attach, d, shape)
    return None


# ---------------------------------------------------------------------------
# one congruent vertex away from H


def in_G123(g: Graph, kind: TransformKind | str,
            connected_remainder: bool = False) -> Optional[TransformCertificate]:
    """A congruent vertex u of the given kind with G - u in H.

    Only G itself has to be connected: G - u may fall apart (K_3 + K_3 is in
    H).  ``connected_remainder`` asks for a connected G - u as well.
    """
    kind = TransformKind(kind)
    if not is_connected(g):
        raise InvalidArgument("G_1, G_2 and G_3 consist of connected graphs")
    for u in range(g.order):
        if kind not in congruent_kinds(g, u):
            continue
        rest = g.delete_vertices([u])
        if in_H(rest) and (not connected_remainder or is_connected(rest)):
            return delete_congruent(g, u, kind)[1]
    return None


# ---------------------------------------------------------------------------
# X = N(v*), Y = the non-neighbors of v*


@dataclass(frozen=True)
class XYAnalysis:
    vstar: int
    X: tuple[int, ...]
    Y: tuple[int, ...]
    gy_shape: str
    x_complete: bool
    reduced: Optional[bool]

    def as_dict(self) -> dict[str, Any]:
        return {"vstar": self.vstar, "X": list(self.X), "Y": list(self.Y),
                "GY_shape": self.gy_shape, "X_complete": self.x_complete, "reduced": self.reduced}


def _gy_shape(g: Graph, ys: list[int]) -> str:
    if not ys:
        return "empty"
    if g.is_clique(mask_of(ys)):
        return "K"
    if is_clique_minus_edge(g, ys):
        return "K-e"
    sub = induced_subgraph(g, ys)
    iso = [v for v in range(sub.order) if sub.adj[v] == 0]
    if len(iso) == 1:
        others = mask_of(v for v in range(sub.order) if v != iso[0])
        if sub.is_clique(others):
            return "K1+K"
    return "other"


def xy_analysis(g: Graph, vstar: int) -> XYAnalysis:
    if not 0 <= vstar < g.order:
        raise InvalidArgument(f"vertex {vstar} out of range")
    if g.degree(vstar) != min_degree(g):
        raise InvalidArgument(f"vertex {vstar} does not have minimum degree")
    xmask = g.adj[vstar]
    xs = list(iter_bits(xmask))
    ys = [v for v in range(g.order) if v != vstar and not xmask >> v & 1]
    ymask = mask_of(ys)
    x_complete = g.is_clique(xmask)
    reduced = None
    if x_complete:
        ny = [g.adj[x] & ymask for x in xs]
        reduced = all(a & b in (a, b) for a, b in combinations(ny, 2))
    return XYAnalysis(vstar, tuple(xs), tuple(ys), _gy_shape(g, ys), x_complete, reduced)


def default_vstar(g: Graph) -> int:
    d = min_degree(g)
    return next(v for v in range(g.order) if g.degree(v) == d)


# ---------------------------------------------------------------------------
# blow-ups of G_k


@dataclass(frozen=True)
class QuotientChains:
    k: int
    t_c: int
    x_sizes: tuple[int, ...]
    y_sizes: tuple[int, ...]
    holds: bool


def quotient_chains(g: Graph, vstar: int) -> QuotientChains:
    """Check the strict neighborhood-size chains on the canonical quotient.

    With v_1 the class of v*, X_c = N(v_1) and Y_c the rest, the sizes
    |N_{Y_c}(x)| over X_c must read 0 < ... <= |Y_c| strictly increasing after
    v_1's 0, and |N_{X_c}(y)| over Y_c must strictly increase up to t_c.
    """
    dec = canonical_decomposition(g)
    q = dec.canonical
    v1 = next(i for i, cls in enumerate(dec.classes) if vstar in cls)
    xm = q.adj[v1]
    ym = q.vertex_mask & ~xm & ~(1 << v1)
    x_sizes = sorted(bin(q.adj[x] & ym).count("1") for x in iter_bits(xm))
    y_sizes = sorted(bin(q.adj[y] & xm).count("1") for y in iter_bits(ym))
    t_c, k = len(x_sizes), q.order
    ny = len(y_sizes)

    def strictly_up(seq):
        return all(a < b for a, b in zip(seq, seq[1:]))

    ok = (strictly_up([0] + x_sizes) and (not x_sizes or x_sizes[-1] <= ny)
          and strictly_up(y_sizes) and (not y_sizes or y_sizes[-1] <= t_c)
          and t_c == (k + 1) // 2 - 1)
    # nestedness, not just sizes
    xs = sorted(iter_bits(xm), key=lambda x: bin(q.adj[x] & ym).count("1"))
    ok = ok and all((q.adj[a] & ym) & ~(q.adj[b] & ym) == 0 for a, b in zip(xs, xs[1:]))
    return QuotientChains(k, t_c, tuple(x_sizes), tuple(y_sizes), ok)


def match_bk(g: Graph) -> Optional[BkSpec]:
    """The swap-normalized spec with realize_bk(spec) isomorphic to ``g``, if any."""
    dec = canonical_decomposition(g)
    k = dec.canonical.order
    if k not in BK_RANGE:
        return None
    m = find_isomorphism(gn(k), dec.canonical)
    if m is None:
        return None
    vs, ws = gn_layout(k)
    size = [dec.class_sizes[m[i]] for i in range(k)]
    s = k // 2
    parts = [size[v] for v in vs[:s]] + [size[w] for w in ws] + [size[v] for v in vs[s:]]
    spec = BkSpec(k, tuple(parts))
    return BkSpec(k, dedup_key(spec))


# ---------------------------------------------------------------------------
# full report


@dataclass
class ClassReport:
    inertia: Inertia
    labels: set[str] = field(default_factory=set)
    branches: list[int] = field(default_factory=list)
    certificates: dict[str, Any] = field(default_factory=dict)
    vstar: Optional[int] = None

    def as_dict(self) -> dict[str, Any]:
        return {
            "inertia": {"p": self.inertia.p, "n_neg": self.inertia.n_neg, "eta": self.inertia.eta},
            "labels": sorted(self.labels),
            "branches": self.branches,
            "vstar": self.vstar,
            "certificates": self.certificates,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.as_dict(), **kw)


def classify_full(g: Graph, all_vstars: bool = False) -> ClassReport:
    """Every class label that applies, with a witness for each connected-G branch.

    Branch 1 is a pendant form, branch 2 a congruent vertex whose removal
    leaves a connected member of H, branch 3 a blow-up of some G_k.
    """
    inertia = inertia_exact(g)
    rep = ClassReport(inertia)
    if in_H(g, inertia):
        rep.labels.add("H")
    if not in_G(g, inertia):
        return rep
    rep.labels.add("G")
    part = split_G(g)
    rep.labels.add(part)
    if part == "G_minus":
        if g.order >= 5:
            rep.certificates["disconnected"] = check_theorem_disconnected(g)
        return rep

    if part == "G_plus":
        form = match_pendant_form(g)
        if form is not None:
            rep.branches.append(1)
            rep.certificates["pendant_form"] = form.as_dict()

    for kind, label in ((TransformKind.I, "G1"), (TransformKind.II, "G2"), (TransformKind.III, "G3")):
        cert = in_G123(g, kind)
        if cert is not None:
            rep.labels.add(label)
            rep.certificates[label] = cert.as_dict()
    if rep.labels & {"G1", "G2", "G3"}:
        rep.branches.append(2)

    rep.vstar = default_vstar(g)
    choices = [rep.vstar]
    if all_vstars:
        d = min_degree(g)
        choices = [v for v in range(g.order) if g.degree(v) == d]
    analyses = [xy_analysis(g, v) for v in choices]
    rep.certificates["xy"] = [a.as_dict() for a in analyses]
    xy = analyses[0]
    if xy.x_complete:
        rep.labels.add("X_complete")
        rep.labels.add("reduced" if xy.reduced else "non_reduced")
        if xy.reduced:
            spec = match_bk(g)
            if spec is not None:
                chains = quotient_chains(g, xy.vstar)
                rep.labels.add("B_star")
                rep.branches.append(3)
                rep.certificates["B_star"] = {"spec": str(spec), "k": spec.k, "t_c": chains.t_c,
                                              "chains_hold": chains.holds}
    return rep


def spectral_obstruction(g: Graph, max_size: int = 6) -> Optional[tuple[int, ...]]:
    """A small vertex set inducing p >= 3, which rules out membership in G."""
    for size in range(6, min(max_size, g.order) + 1):
        for vs in combinations(range(g.order), size):
            if inertia_exact(induced_subgraph(g, vs)).p >= 3:
                return vs
    return None
