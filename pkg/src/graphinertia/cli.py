"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a counterexample,
2 on a usage error (bad arguments, malformed graph6).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import verification as vf
from .classifier import classify_full
from .enumerator import BkClass, census, format_table1, to_csv, to_json
from .errors import InvalidArgument, UnsupportedOrder
from .formats import Graph6Error, from_graph6, to_dot, to_graph6
from .graph import BkSpec, Graph, complete_multipartite, gn, k_joining, realize_bk
from .spectra import eigenvalues_float, inertia_exact
from .transforms import add_type1, add_type2, add_type3, delete_congruent


class UsageError(Exception):
    pass


def parse_graph(text: str) -> Graph:
    """graph6, or a B_k spec such as ``B5(2,2;2,2;1)``."""
    t = text.strip()
    # order-3 graph6 strings also begin with "B"; only specs carry parentheses
    if t.startswith("B") and "(" in t:
        return realize_bk(BkSpec.parse(t))
    try:
        return from_graph6(t)
    except Graph6Error as e:
        raise UsageError(f"malformed graph6: {e}") from None


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# verbs


def cmd_inertia(args, out) -> int:
    g = parse_graph(args.graph)
    i = inertia_exact(g)
    if args.json:
        d = {"p": i.p, "n_neg": i.n_neg, "eta": i.eta}
        if args.float:
            d["spectrum"] = [round(x, 6) + 0.0 for x in eigenvalues_float(g).values]
        _emit(out, json.dumps(d))
    else:
        _emit(out, str(i))
        if args.float:
            _emit(out, " ".join(f"{x:.6f}" for x in eigenvalues_float(g).values))
    return 0


def cmd_spectrum(args, out) -> int:
    g = parse_graph(args.graph)
    spec = eigenvalues_float(g, args.tol)
    i = spec.inertia()
    _emit(out, json.dumps({"spectrum": [round(x, 6) + 0.0 for x in spec.values],
                           "inertia": {"p": i.p, "n_neg": i.n_neg, "eta": i.eta}}))
    return 0


def cmd_construct(args, out) -> int:
    kind, vals = args.family, args.values
    try:
        if kind == "gn":
            if len(vals) != 1:
                raise UsageError("construct gn N")
            g = gn(int(vals[0]))
        elif kind == "bk":
            if len(vals) == 1 and "(" in vals[0]:
                spec = BkSpec.parse(vals[0])
            else:
                if not vals:
                    raise UsageError("construct bk K n1 .. nK")
                k, parts = int(vals[0]), tuple(int(x) for x in vals[1:])
                spec = BkSpec(k, parts)
            g = realize_bk(spec)
        elif kind == "multipartite":
            g = complete_multipartite([int(x) for x in vals])
        elif kind == "kjoin":
            if len(vals) < 3:
                raise UsageError("construct kjoin r g6 attach..")
            g = k_joining(int(vals[0]), parse_graph(vals[1]), [int(x) for x in vals[2:]])
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(f"unknown family {kind}")
    except ValueError as e:
        if isinstance(e, InvalidArgument):
            raise
        raise UsageError(str(e)) from None
    _emit(out, to_graph6(g))
    return 0


def cmd_classify(args, out) -> int:
    rep = classify_full(parse_graph(args.graph), all_vstars=args.all_vstars)
    _emit(out, rep.to_json(indent=2 if args.pretty else None))
    return 0


def cmd_transform(args, out) -> int:
    g = parse_graph(args.graph)
    w = args.vertices
    op = args.op
    want = {"add-1": 1, "add-2": 2, "add-3": 3, "delete": 1}[op]
    if len(w) != want:
        raise UsageError(f"{op} takes {want} vertex argument(s)")
    if op == "add-1":
        h, cert = add_type1(g, *w)
    elif op == "add-2":
        h, cert = add_type2(g, *w)
    elif op == "add-3":
        h, cert = add_type3(g, *w)
    else:
        if args.kind is None:
            raise UsageError("delete needs --kind I|II|III")
        h, cert = delete_congruent(g, w[0], args.kind)
    _emit(out, to_graph6(h))
    _emit(out, cert.to_json())
    return 0


def cmd_enumerate(args, out) -> int:
    ks = [args.k] if args.k is not None else list(range(4, 14))
    for k in ks:
        if not 4 <= k <= 13:
            raise UsageError("--k must lie in 4..13")
    cls = BkClass(args.cls) if args.cls else None
    by_k = {k: census(k, args.max_n, cls) for k in ks}
    rows = [r for k in ks for r in by_k[k]]
    if args.format == "csv":
        _emit(out, to_csv(rows))
    elif args.format == "json":
        _emit(out, to_json(rows))
    else:
        _emit(out, format_table1(by_k))
    return 0


VERIFY_TARGETS = ("table1", "appendix-hist", "b0-empty-14", "bminus-empty-14",
                  "theorem-disconnected", "theorem-main", "transforms", "oracle",
                  "spectra", "gn-chain", "bminus-patterns", "bstar-structure")


def cmd_verify(args, out) -> int:
    t = args.target
    if t in ("theorem-disconnected", "theorem-main", "oracle") and args.order is None:
        raise UsageError(f"verify {t} needs --order")
    try:
        if t == "table1":
            chk = vf.check_table1()
        elif t == "appendix-hist":
            chk = vf.check_appendix_hist()
        elif t == "b0-empty-14":
            chk = vf.check_b0_empty_14()
        elif t == "bminus-empty-14":
            chk = vf.check_bminus_empty_14()
        elif t == "theorem-disconnected":
            chk = vf.check_theorem_disconnected_sweep(args.order)
        elif t == "theorem-main":
            chk = vf.check_theorem_main_sweep(args.order)
        elif t == "transforms":
            chk = vf.check_transforms(args.trials, args.seed)
        elif t == "oracle":
            chk = vf.check_oracle(args.order, bstar=args.bstar)
        elif t == "spectra":
            chk = vf.check_spectra()
        elif t == "gn-chain":
            chk = vf.check_gn_chain()
        elif t == "bminus-patterns":
            chk = vf.check_bminus_patterns()
        else:
            chk = vf.check_bstar_structure()
    except UnsupportedOrder as e:
        raise UsageError(str(e)) from None
    _emit(out, chk.line())
    return 0 if chk.ok else 1


def cmd_export(args, out) -> int:
    _emit(out, to_dot(parse_graph(args.graph), args.name))
    return 0


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphinertia", description="Exact adjacency inertia and the p=2, eta=1 classification.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("inertia", help="exact (p, n, eta) of a graph6 string or B_k spec")
    s.add_argument("graph")
    s.add_argument("--float", action="store_true", help="also print the Jacobi spectrum")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_inertia)

    s = sub.add_parser("spectrum", help="floating-point spectrum as JSON")
    s.add_argument("graph")
    s.add_argument("--tol", type=float, default=1e-6)
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("construct", help="print graph6 of a named family")
    s.add_argument("family", choices=("gn", "bk", "multipartite", "kjoin"))
    s.add_argument("values", nargs="*")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("classify", help="JSON class report")
    s.add_argument("graph")
    s.add_argument("--all-vstars", action="store_true")
    s.add_argument("--pretty", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("transform", help="add or delete a congruent vertex")
    s.add_argument("op", choices=("add-1", "add-2", "add-3", "delete"))
    s.add_argument("graph")
    s.add_argument("vertices", nargs="*", type=int)
    s.add_argument("--kind", choices=("I", "II", "III"))
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("enumerate", help="B_k census")
    s.add_argument("--k", type=int)
    s.add_argument("--max-n", type=int, default=13)
    s.add_argument("--class", dest="cls", choices=[c.value for c in BkClass])
    s.add_argument("--format", choices=("csv", "json", "table1"), default="csv")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="run a reproduction check")
    s.add_argument("target", choices=VERIFY_TARGETS)
    s.add_argument("--order", type=int)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bstar", action="store_true", help="oracle: include the 802 B* graphs")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("export", help="export formats")
    s.add_argument("format", choices=("dot",))
    s.add_argument("graph")
    s.add_argument("--name", default="G")
    s.set_defaults(func=cmd_export)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, InvalidArgument, UnsupportedOrder) as e:
        err.write(f"error: {e}\n")
        return 2


def main() -> None:  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
