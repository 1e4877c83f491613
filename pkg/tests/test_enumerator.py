import json
from math import comb

import pytest

from graphinertia.enumerator import (CSV_COLUMNS, BkClass, census, class_of_inertia, classify_bk,
                                     compositions, dedup_key, format_table1, graphs_of_order,
                                     normalize, pattern_match_bminus, sweep_all_graphs, to_csv,
                                     to_json, unique_specs)
from graphinertia.errors import InternalError, InvalidArgument, UnsupportedOrder
from graphinertia.graph import BkSpec
from graphinertia.spectra import Inertia


@pytest.mark.parametrize("n,k", [(13, 4), (14, 13), (8, 8), (9, 1), (10, 5)])
def test_composition_counts(n, k):
    cs = list(compositions(n, k))
    assert len(cs) == comb(n - 1, k - 1)
    assert cs == sorted(cs) and len(set(cs)) == len(cs)
    assert all(sum(c) == n and min(c) >= 1 for c in cs)


def test_composition_edge_cases():
    assert list(compositions(3, 4)) == []
    assert list(compositions(3, 0)) == []


def test_dedup_examples():
    assert dedup_key(BkSpec.parse("B6(4,3,1;4,3,2)")) == (4, 3, 2, 4, 3, 1)
    assert dedup_key(BkSpec.parse("B7(5,2,4;5,3,2;8)")) == (5, 3, 2, 5, 2, 4, 8)
    s = BkSpec.parse("B5(1,2;3,4;5)")
    assert dedup_key(s) == dedup_key(s.swapped())
    assert normalize(normalize(s)) == normalize(s)


def test_class_of_inertia():
    assert class_of_inertia(Inertia(3, 1, 0)) is BkClass.BPLUS
    assert class_of_inertia(Inertia(2, 2, 3)) is BkClass.B00
    assert class_of_inertia(Inertia(2, 2, 1)) is BkClass.B0
    assert class_of_inertia(Inertia(2, 2, 0)) is BkClass.BMINUS
    with pytest.raises(InternalError):
        class_of_inertia(Inertia(1, 1, 0))


@pytest.mark.parametrize("text,cls", [
    ("B5(2,2;2,2;1)", BkClass.B0),
    ("B4(1,1;1,1)", BkClass.BMINUS),
    ("B10(1,1,2,3,2;1,1,1,1,1)", BkClass.B00),
    ("B4(3,2;3,2)", BkClass.B0),
])
def test_classify_examples(text, cls):
    spec = BkSpec.parse(text)
    row = classify_bk(spec)
    assert row.cls is cls and row.order == spec.order
    assert classify_bk(spec.swapped()).cls is cls


def test_classify_rejects_small_k():
    with pytest.raises(InvalidArgument):
        classify_bk(BkSpec.of(1, 1, 1))


def test_unique_specs_are_swap_classes():
    specs = unique_specs(4, range(4, 9))
    keys = [dedup_key(s) for s in specs]
    assert keys == [s.parts for s in specs]
    assert len(set(keys)) == len(keys)
    assert [s.order for s in specs] == sorted(s.order for s in specs)


def test_census_small_and_filters():
    rows = census(4, 8)
    assert {r.cls for r in rows} <= set(BkClass)
    b0 = census(4, 8, "B0")
    assert b0 == [r for r in rows if r.cls is BkClass.B0]
    only8 = census(4, 8, n_min=8)
    assert all(r.order == 8 for r in only8)
    with pytest.raises(InvalidArgument):
        census(3, 8)


def test_b0_k4_order13_offenders():
    assert len(census(4, 13, BkClass.B0, n_min=13)) == 10
    assert len(census(4, 13, BkClass.B0)) == 18


@pytest.mark.parametrize("k,text,fam", [
    (5, "B5(7,3;1,1;1)", 1),
    (4, "B4(5,5;1,4)", 1),
    (4, "B4(1,4;5,5)", 1),
    (5, "B5(4,2;2,1;3)", None),
])
def test_pattern_examples(k, text, fam):
    assert pattern_match_bminus(k, BkSpec.parse(text)) == fam


def test_pattern_guards():
    with pytest.raises(InvalidArgument):
        pattern_match_bminus(10, BkSpec.of(*[1] * 10))
    with pytest.raises(InvalidArgument):
        pattern_match_bminus(4, BkSpec.of(*[1] * 5))


def test_sweep_guard_and_counts():
    with pytest.raises(UnsupportedOrder):
        list(graphs_of_order(8))
    with pytest.raises(InvalidArgument):
        list(graphs_of_order(0))
    # numbers of unlabelled graphs on 1..6 vertices
    assert [sum(1 for _ in graphs_of_order(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    assert sum(1 for _ in graphs_of_order(4, dedup=False)) == 64


def test_sweep_callback_protocol():
    s = sweep_all_graphs(4, lambda g: None if g.edge_count == 0 else (False if g.edge_count == 6 else g.edge_count))
    assert s.graphs == 11 and len(s.counterexamples) == 1 and not s.ok
    assert sum(s.counts.values()) == 9


def test_dumps():
    rows = census(4, 7, BkClass.B0)
    text = to_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0].split(",") == list(CSV_COLUMNS)
    assert len(lines) == len(rows) + 1
    data = json.loads(to_json(rows))
    assert [d["order"] for d in data] == [r.order for r in rows]
    table = format_table1({4: rows})
    assert table.splitlines()[0] == f"k=4 ({len(rows)})"
    assert table.rstrip().endswith(f"total {len(rows)}")
