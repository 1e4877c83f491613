"""Reproducible checks behind ``graphinertia verify``.

Each check returns a :class:`Check`; ``ok`` is False exactly when a
counterexample or a count mismatch was found.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable

from . import tables
from .classifier import (check_theorem_disconnected, classify_full, default_vstar, in_G,
                         match_bk, match_pendant_form, quotient_chains, xy_analysis)
from .enumerator import (BMINUS_FAMILIES, BkClass, census, normalize, pattern_match_bminus,
                         sweep_all_graphs, verify_empty_at_14)
from .graph import BkSpec, Graph, canonical_decomposition, gn, is_connected, pendant_vertices, realize_bk
from .iso import contains_induced, find_isomorphism
from .spectra import Inertia, eigenvalues_float, inertia_exact, inertia_float
from .transforms import TransformKind, add_type1, add_type2, add_type3, delete_congruent


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    data: dict[str, Any] = field(default_factory=dict)

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail}"


def _spec_text(spec: BkSpec) -> str:
    return str(spec).replace(" ", "")


def b0_rows_by_k(n_max: int = 13) -> dict[int, list]:
    return {k: census(k, n_max, BkClass.B0) for k in range(4, 14)}


def check_table1(rows_by_k: dict[int, list] | None = None) -> Check:
    rows_by_k = rows_by_k or b0_rows_by_k()
    counts = {k: len(v) for k, v in rows_by_k.items()}
    problems = []
    if counts != tables.TABLE1_COUNTS:
        problems.append(f"counts {counts}")
    for k, listed in tables.TABLE1.items():
        got = sorted(_spec_text(r.spec) for r in rows_by_k[k])
        want = sorted(_spec_text(normalize(BkSpec.parse(s))) for s in listed)
        if got != want:
            problems.append(f"k={k} list differs")
    for k, listed in tables.APPENDIX.items():
        got = sorted(_spec_text(r.spec) for r in rows_by_k[k])
        want = sorted(_spec_text(normalize(BkSpec.parse(s))) for _, s in listed)
        if got != want:
            problems.append(f"k={k} appendix list differs")
    total = sum(counts.values())
    detail = f"total {total}, per k {[counts[k] for k in sorted(counts)]}"
    return Check("table1", not problems and total == 802, "; ".join(problems) or detail,
                 {"counts": counts})


def check_appendix_hist(rows_by_k: dict[int, list] | None = None) -> Check:
    rows_by_k = rows_by_k or {k: census(k, 13, BkClass.B0) for k in range(6, 11)}
    hist = Counter(r.order for k in range(6, 11) for r in rows_by_k[k])
    ok = dict(hist) == tables.APPENDIX_ORDER_HISTOGRAM
    return Check("appendix-hist", ok, f"orders {dict(sorted(hist.items()))}, total {sum(hist.values())}")


def check_b0_empty_14() -> Check:
    ok, bad = verify_empty_at_14(BkClass.B0, range(4, 14))
    return Check("b0-empty-14", ok, f"{len(bad)} offenders for 4 <= k <= 13",
                 {"offenders": [str(r.spec) for r in bad]})


def check_bminus_empty_14() -> Check:
    ok, bad = verify_empty_at_14(BkClass.BMINUS, range(10, 14))
    return Check("bminus-empty-14", ok, f"{len(bad)} offenders for 10 <= k <= 13",
                 {"offenders": [str(r.spec) for r in bad]})


def check_bminus_patterns(n: int = 13) -> Check:
    mismatches = []
    hits = 0
    for k in sorted(BMINUS_FAMILIES):
        for row in census(k, n, n_min=n):
            hit = pattern_match_bminus(k, row.spec) is not None
            hits += hit
            if hit != (row.cls is BkClass.BMINUS):
                mismatches.append(str(row.spec))
    return Check("bminus-patterns", not mismatches,
                 f"{hits} family hits at order {n}, {len(mismatches)} mismatches",
                 {"mismatches": mismatches})


def check_gn_chain(top: int = 13) -> Check:
    missing = [n for n in range(2, top + 1) if contains_induced(gn(n + 1), gn(n)) is None]
    return Check("gn-chain", not missing, f"G_n inside G_(n+1) for 2 <= n <= {top}; missing {missing}")


# ---------------------------------------------------------------------------
# worked examples with published spectra


def example_graphs() -> dict[str, Graph]:
    from .graph import path
    p4 = path(4)
    return {
        "P4": p4,
        "H1": add_type1(p4, 0)[0],
        "H2": add_type2(p4, 0, 3)[0],
        "H3": add_type3(p4, 1, 2, 3)[0],
    }


PUBLISHED_SPECTRA = {
    "P4": ((1.6180, 0.6180, -0.6180, -1.6180), Inertia(2, 2, 0)),
    "H1": ((1.8478, 0.7654, 0.0, -0.7654, -1.8478), Inertia(2, 2, 1)),
    "H2": ((2.3028, 0.6180, 0.0, -1.3028, -1.6180), Inertia(2, 2, 1)),
    "H3": ((2.4812, 0.6889, 0.0, -1.1701, -2.0), Inertia(2, 2, 1)),
}


def check_spectra(tol: float = 1e-3) -> Check:
    bad = []
    for name, g in example_graphs().items():
        want, inertia = PUBLISHED_SPECTRA[name]
        got = eigenvalues_float(g).values
        if len(got) != len(want) or any(abs(a - b) > tol for a, b in zip(got, want)):
            bad.append(f"{name} spectrum {got}")
        if inertia_exact(g) != inertia:
            bad.append(f"{name} inertia {inertia_exact(g)}")
    return Check("spectra", not bad, "; ".join(bad) or "P4, H1, H2, H3 match")


# ---------------------------------------------------------------------------
# random transformation trials


def _random_graph(rng: random.Random, n: int) -> list[int]:
    density = rng.random()
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def _set_row(rows: list[int], v: int, new: int) -> None:
    for u in range(len(rows)):
        if u != v:
            if new >> u & 1:
                rows[u] |= 1 << v
            else:
                rows[u] &= ~(1 << v)
    rows[v] = new & ~(1 << v)


def random_instance(rng: random.Random, kind: TransformKind, max_order: int = 12):
    """A random graph (order <= max_order - 1) and a witness valid for ``kind``."""
    lo = {TransformKind.I: 1, TransformKind.II: 2, TransformKind.III: 3}[kind]
    n = rng.randint(lo, max_order - 1)
    rows = _random_graph(rng, n)
    if kind is TransformKind.I:
        return Graph(n, tuple(rows)), (rng.randrange(n),)
    if kind is TransformKind.II:
        v, w = rng.sample(range(n), 2)
        _set_row(rows, w, rows[w] & ~rows[v] & ~(1 << v))
        return Graph(n, tuple(rows)), (v, w)
    v, x, y = rng.sample(range(n), 3)
    rows[v] |= 1 << x
    rows[x] |= 1 << v
    _set_row(rows, y, (rows[x] & ~(1 << y) & ~(1 << v)) | 1 << x)
    return Graph(n, tuple(rows)), (v, x, y)


_ADDERS: dict[TransformKind, Callable] = {
    TransformKind.I: add_type1, TransformKind.II: add_type2, TransformKind.III: add_type3,
}


def check_transforms(trials: int = 1000, seed: int = 0, max_order: int = 12) -> Check:
    rng = random.Random(seed)
    bad = []
    for kind, add in _ADDERS.items():
        for _ in range(trials):
            g, wit = random_instance(rng, kind, max_order)
            h, cert = add(g, *wit)
            b, a = inertia_exact(g), inertia_exact(h)
            if (a.p, a.n_neg, a.eta) != (b.p, b.n_neg, b.eta + 1) or h.order > max_order:
                bad.append((kind.value, g.edges(), wit))
            back, _ = delete_congruent(h, g.order, kind)
            if back != g:
                bad.append((kind.value, "round trip", g.edges(), wit))
    return Check("transforms", not bad, f"{trials} trials per kind, seed {seed}, {len(bad)} failures",
                 {"failures": bad[:10]})


# ---------------------------------------------------------------------------
# exhaustive sweeps


def check_theorem_disconnected_sweep(order: int) -> Check:
    def cb(g: Graph):
        if is_connected(g):
            return None
        branch = check_theorem_disconnected(g)
        if (branch is not None) != in_G(g):
            return False
        return branch or "not in G"

    s = sweep_all_graphs(order, cb)
    return Check(f"theorem-disconnected order {order}", s.ok,
                 f"{s.graphs} graphs, {dict(s.counts)}, {len(s.counterexamples)} counterexamples",
                 {"counterexamples": [g.edges() for g in s.counterexamples]})


def check_theorem_main_sweep(order: int) -> Check:
    """Connected members of G are certified by some branch; pendant forms give eta exactly."""

    def cb(g: Graph):
        if not is_connected(g):
            return None
        inertia = inertia_exact(g)
        if pendant_vertices(g):
            form = match_pendant_form(g)
            if (inertia.p == 2) != (form is not None):
                return False
            if form is not None and form.d != inertia.eta:
                return False
        if not in_G(g, inertia):
            return None
        rep = classify_full(g)
        if not rep.branches:
            return False
        return "branches " + "+".join(map(str, rep.branches))

    s = sweep_all_graphs(order, cb)
    return Check(f"theorem-main order {order}", s.ok,
                 f"{s.graphs} graphs, {dict(s.counts)}, {len(s.counterexamples)} counterexamples",
                 {"counterexamples": [g.edges() for g in s.counterexamples]})


def check_oracle(order: int, bstar: bool = False, tol: float = 1e-6) -> Check:
    bad = []
    total = 0
    for n in range(1, order + 1):
        def cb(g: Graph):
            if inertia_exact(g) != inertia_float(g, tol):
                return False
            return "agree"
        s = sweep_all_graphs(n, cb)
        total += s.graphs
        bad.extend(g.edges() for g in s.counterexamples)
    extra = ""
    if bstar:
        rows = [r for rs in b0_rows_by_k().values() for r in rs]
        for r in rows:
            if inertia_float(realize_bk(r.spec), tol) != r.inertia:
                bad.append(str(r.spec))
        extra = f" and {len(rows)} B* graphs"
    return Check(f"oracle order <= {order}", not bad,
                 f"{total} graphs{extra}, {len(bad)} disagreements", {"disagreements": bad[:10]})


def check_bstar_structure(rows_by_k: dict[int, list] | None = None) -> Check:
    rows_by_k = rows_by_k or b0_rows_by_k()
    bad = []
    n = 0
    for k, rows in rows_by_k.items():
        for r in rows:
            n += 1
            g = realize_bk(r.spec)
            dec = canonical_decomposition(g)
            vstar = default_vstar(g)
            xy = xy_analysis(g, vstar)
            chains = quotient_chains(g, vstar)
            ok = (dec.canonical.order == k and find_isomorphism(gn(k), dec.canonical) is not None
                  and chains.holds and chains.t_c == (k + 1) // 2 - 1
                  and xy.x_complete and xy.reduced and match_bk(g) == r.spec)
            if not ok:
                bad.append(str(r.spec))
    return Check("bstar-structure", not bad, f"{n} graphs, {len(bad)} failures", {"failures": bad[:10]})
