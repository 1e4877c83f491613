"""The B_k census, its four-way spectral split and exhaustive small-order sweeps."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

import numpy as np

from . import kernels
from .errors import InternalError, InvalidArgument, UnsupportedOrder
from .graph import BkSpec, Graph, realize_bk
from .spectra import Inertia, inertia_exact

SWEEP_MAX_ORDER = 7


class BkClass(str, Enum):
    BPLUS = "Bplus"
    B00 = "B00"
    B0 = "B0"
    BMINUS = "Bminus"

    def __str__(self):
        return self.value


def class_of_inertia(inertia: Inertia) -> BkClass:
    """lambda_3 > 0, or lambda_3 = 0 with eta >= 2, eta = 1 or eta = 0 (given p >= 2)."""
    if inertia.p >= 3:
        return BkClass.BPLUS
    if inertia.p < 2:
        raise InternalError(f"B_k graph with p = {inertia.p}; P_4 should be induced")
    if inertia.eta >= 2:
        return BkClass.B00
    return BkClass.B0 if inertia.eta == 1 else BkClass.BMINUS


@dataclass(frozen=True)
class CensusRow:
    spec: BkSpec
    order: int
    cls: BkClass
    inertia: Inertia

    def as_dict(self) -> dict[str, Any]:
        return {
            "k": self.spec.k,
            "parts": list(self.spec.parts),
            "spec": str(self.spec),
            "order": self.order,
            "p": self.inertia.p,
            "n_neg": self.inertia.n_neg,
            "eta": self.inertia.eta,
            "class": self.cls.value,
            "dedup_key": list(dedup_key(self.spec)),
        }


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All C(n-1, k-1) compositions of ``n`` into ``k`` positive parts, lexicographically."""
    if k < 1 or k > n:
        return
    # cut points in lexicographic order give part vectors in lexicographic order
    for cuts in combinations(range(1, n), k - 1):
        b = (0,) + cuts + (n,)
        yield tuple(b[i + 1] - b[i] for i in range(k))


def dedup_key(spec: BkSpec) -> tuple[int, ...]:
    """Parts with the dictionary-greater half written first.

    B_k with its two s-blocks exchanged is isomorphic to the original, so the
    key identifies each swap pair; the odd trailing part never moves.
    """
    a, b, rest = spec.halves()
    return max(a, b) + min(a, b) + rest


def normalize(spec: BkSpec) -> BkSpec:
    return BkSpec(spec.k, dedup_key(spec))


def classify_bk(spec: BkSpec) -> CensusRow:
    if spec.k < 4:
        raise InvalidArgument("the four-way split is defined for k >= 4")
    inertia = inertia_exact(realize_bk(spec))
    return CensusRow(spec, spec.order, class_of_inertia(inertia), inertia)


def unique_specs(k: int, orders: Iterable[int]) -> list[BkSpec]:
    """Swap-normalized specs, sorted by order and then by parts."""
    keys = {dedup_key(BkSpec(k, parts)) for n in orders for parts in compositions(n, k)}
    return [BkSpec(k, key) for key in sorted(keys, key=lambda p: (sum(p), p))]


def census(k: int, n_max: int, cls: Optional[BkClass | str] = None,
           n_min: Optional[int] = None) -> list[CensusRow]:
    """Every swap-normalized B_k of order up to ``n_max``, classified.

    Rows come sorted by order, then by parts.
    """
    if not 4 <= k <= 64 or n_max > 64:
        raise InvalidArgument("census needs 4 <= k and n_max <= 64")
    want = BkClass(cls) if cls is not None else None
    lo = k if n_min is None else max(k, n_min)
    rows = []
    for spec in unique_specs(k, range(lo, n_max + 1)):
        row = classify_bk(spec)
        if want is None or row.cls is want:
            rows.append(row)
    return rows


def verify_empty_at_14(which: BkClass | str, k_range: Iterable[int],
                       n: int = 14) -> tuple[bool, list[CensusRow]]:
    """True when no B_k of order ``n`` (k in ``k_range``) lands in ``which``."""
    which = BkClass(which)
    offenders = []
    for k in k_range:
        offenders.extend(census(k, n, which, n_min=n))
    return not offenders, offenders


# ---------------------------------------------------------------------------
# Parametric families of lambda_2 > 0 > lambda_3 for 4 <= k <= 9.  Letters are
# free positive integers except x, y, z <= 2 and w <= 3; digits are literal.

BMINUS_FAMILIES: dict[int, tuple[str, ...]] = {
    4: ("a,b;1,d", "a,x;y,1", "a,1;c,1", "a,1;w,x", "a,1;x,d", "w,b;x,1",
        "w,x;y,d", "x,b;y,d"),
    5: ("a,w;1,1;1", "a,x;1,d;1", "a,x;1,y;z", "a,x;1,1;e", "a,1;c,1;e",
        "a,1;x,w;1", "a,1;x,y;e", "a,1;1,d;e", "w,x;y,1;e", "x,b;1,1;1",
        "x,w;1,d;1", "x,w;1,1;e", "1,b;1,d;1", "1,b;1,x;y", "1,x;1,y;e"),
    6: ("a,x,c;1,1,1", "a,1,c;1,e,1", "a,1,c;1,x,y", "a,1,c;1,1,f",
        "a,1,1;x,e,1", "x,b,1;y,1,1", "x,y,1;1,e,1", "x,y,1;1,1,f",
        "x,1,c;y,1,f", "1,b,x;1,1,1", "1,b,1;1,e,1", "1,b,1;1,x,y",
        "1,x,y;1,1,f"),
    7: ("a,1,x;1,e,1;1", "a,1,1;1,e,1;g", "a,1,1;1,1,x;1", "x,y,1;1,e,1;g",
        "x,1,1;y,1,1;g", "1,b,x;1,1,1;g", "1,b,1;1,e,1;g", "1,1,c;1,1,f;1"),
    8: ("a,1,1,d;1,1,g,1", "1,b,1,1;1,f,1,1"),
    9: ("1,b,1,1;1,f,1,1;k",),
}

# sporadic members of orders 10..12, known only by count
BMINUS_SPORADIC = {
    4: {10: 5, 11: 10, 12: 10},
    5: {10: 13, 11: 25, 12: 25},
    6: {10: 22, 11: 54, 12: 69},
    7: {10: 18, 11: 52, 12: 73},
    8: {10: 12, 11: 42, 12: 80},
    9: {10: 3, 11: 17, 12: 39},
}

_BOUNDS = {"x": 2, "y": 2, "z": 2, "w": 3}


def _fits(tokens: Sequence[str], parts: Sequence[int]) -> bool:
    bound: dict[str, int] = {}
    for tok, v in zip(tokens, parts):
        if tok.isdigit():
            if int(tok) != v:
                return False
        elif v > _BOUNDS.get(tok, v):
            return False
        elif bound.setdefault(tok, v) != v:
            return False
    return True


def pattern_match_bminus(k: int, spec: BkSpec) -> Optional[int]:
    """1-based index of the first family containing ``spec`` (up to half swap)."""
    if k not in BMINUS_FAMILIES:
        raise InvalidArgument("families are recorded for 4 <= k <= 9")
    if spec.k != k:
        raise InvalidArgument(f"spec has k={spec.k}, expected {k}")
    candidates = (spec.parts, spec.swapped().parts)
    for idx, fam in enumerate(BMINUS_FAMILIES[k], 1):
        tokens = fam.replace(";", ",").split(",")
        if any(_fits(tokens, c) for c in candidates):
            return idx
    return None


# ---------------------------------------------------------------------------
# exhaustive sweeps


@dataclass
class SweepSummary:
    order: int
    graphs: int
    counts: Counter = field(default_factory=Counter)
    counterexamples: list[Graph] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def graphs_of_order(order: int, dedup: bool = True, allow_large: bool = False) -> Iterator[Graph]:
    """Every graph on ``order`` vertices: one per isomorphism class, or every labelling."""
    if order < 1:
        raise InvalidArgument("order must be positive")
    if order > SWEEP_MAX_ORDER and not allow_large:
        raise UnsupportedOrder(f"sweeps stop at order {SWEEP_MAX_ORDER} unless forced")
    if dedup:
        if order > kernels.CODE_MAX_ORDER:
            raise UnsupportedOrder("dedup needs canonical codes")
        codes = np.unique(np.asarray(kernels.labelled_codes(order), dtype=np.uint64))
        for code in codes:
            yield Graph(order, tuple(kernels.rows_from_code(order, int(code))))
    else:
        m = order * (order - 1) // 2
        for mask in range(1 << m):
            yield Graph(order, tuple(kernels.rows_from_pairs(order, mask)))


def sweep_all_graphs(order: int, callback: Callable[[Graph], Any], dedup: bool = True,
                     allow_large: bool = False) -> SweepSummary:
    """Run ``callback`` on every graph of the given order.

    The callback returns a tag to count, ``None`` to skip, or ``False`` to
    record the graph as a counterexample.
    """
    summary = SweepSummary(order, 0)
    for g in graphs_of_order(order, dedup, allow_large):
        summary.graphs += 1
        tag = callback(g)
        if tag is False:
            summary.counterexamples.append(g)
        elif tag is not None:
            summary.counts[tag] += 1
    return summary


# ---------------------------------------------------------------------------
# dumps

CSV_COLUMNS = ("k", "parts", "order", "p", "n_neg", "eta", "class", "dedup_key")


def to_csv(rows: Iterable[CensusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        d = r.as_dict()
        w.writerow([d["k"], " ".join(map(str, d["parts"])), d["order"], d["p"], d["n_neg"],
                    d["eta"], d["class"], " ".join(map(str, d["dedup_key"]))])
    return buf.getvalue()


def to_json(rows: Iterable[CensusRow]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=2)


def format_table1(rows_by_k: dict[int, list[CensusRow]]) -> str:
    lines = []
    total = 0
    for k in sorted(rows_by_k):
        rows = rows_by_k[k]
        total += len(rows)
        lines.append(f"k={k} ({len(rows)})")
        for r in rows:
            lines.append(f"  {r.spec}")
    lines.append(f"total {total}")
    return "\n".join(lines) + "\n"
