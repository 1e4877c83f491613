import io
import json

import pytest

from graphinertia.cli import parse_graph, run
from graphinertia.formats import from_graph6, to_graph6
from graphinertia.graph import BkSpec, gn, path, realize_bk
from graphinertia.transforms import add_type2


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_inertia_text_and_json():
    code, out, _ = call("inertia", "Ch")
    assert code == 0 and "2" in out
    code, out, _ = call("inertia", "Ch", "--json", "--float")
    d = json.loads(out)
    assert (d["p"], d["n_neg"], d["eta"]) == (2, 2, 0)
    assert d["spectrum"][0] == pytest.approx(1.618034, abs=1e-5)


def test_inertia_accepts_bk_spec():
    code, out, _ = call("inertia", "B4(3,2;3,2)", "--json")
    d = json.loads(out)
    assert code == 0 and (d["p"], d["eta"]) == (2, 1)


def test_spectrum():
    code, out, _ = call("spectrum", "C~")
    d = json.loads(out)
    assert code == 0 and d["spectrum"] == pytest.approx([3, -1, -1, -1])
    assert d["inertia"] == {"p": 1, "n_neg": 3, "eta": 0}


@pytest.mark.parametrize("argv,graph", [
    (("construct", "gn", "6"), gn(6)),
    (("construct", "bk", "4", "1", "1", "1", "1"), gn(4)),
    (("construct", "bk", "B5(2,2;2,2;1)"), realize_bk(BkSpec.parse("B5(2,2;2,2;1)"))),
])
def test_construct(argv, graph):
    code, out, _ = call(*argv)
    assert code == 0 and from_graph6(out.strip()) == graph


def test_construct_multipartite_and_kjoin():
    code, out, _ = call("construct", "multipartite", "1", "2")
    assert code == 0 and from_graph6(out.strip()).edge_count == 2
    code, out, _ = call("construct", "kjoin", "2", to_graph6(gn(3)), "0", "1")
    assert code == 0 and from_graph6(out.strip()).order == 6


def test_classify():
    h2 = to_graph6(add_type2(path(4), 0, 3)[0])
    code, out, _ = call("classify", h2, "--pretty")
    d = json.loads(out)
    assert code == 0
    assert {"G", "G_plus", "G2"} <= set(d["labels"])
    assert d["branches"] == [1, 2]


def test_transform_add_and_delete():
    code, out, _ = call("transform", "add-1", "Ch", "0")
    lines = out.strip().split("\n")
    assert code == 0 and from_graph6(lines[0]).order == 5
    cert = json.loads(lines[1])
    assert cert["before"] == [2, 2, 0] and cert["after"] == [2, 2, 1]
    code, out, _ = call("transform", "delete", lines[0], "4", "--kind", "I")
    assert code == 0 and from_graph6(out.split("\n")[0]) == path(4)


def test_transform_usage_errors():
    assert call("transform", "add-2", "Ch", "0")[0] == 2
    assert call("transform", "delete", "Ch", "0")[0] == 2
    # 0 and 1 are adjacent in P4
    assert call("transform", "add-2", "Ch", "0", "1")[0] == 2
    assert call("transform", "delete", "Ch", "0", "--kind", "I")[0] == 2


def test_enumerate_formats():
    code, out, _ = call("enumerate", "--k", "4", "--max-n", "8", "--class", "B0")
    assert code == 0 and out.startswith("k,parts,order")
    code, out, _ = call("enumerate", "--k", "4", "--max-n", "8", "--format", "json")
    assert code == 0 and all(r["k"] == 4 for r in json.loads(out))
    code, out, _ = call("enumerate", "--k", "13", "--max-n", "13", "--class", "B0",
                        "--format", "table1")
    assert code == 0 and "k=13 (1)" in out
    assert call("enumerate", "--k", "3")[0] == 2


def test_verify_quick_targets():
    for target in ("spectra", "gn-chain", "b0-empty-14"):
        code, out, _ = call("verify", target)
        assert code == 0 and out.startswith("PASS"), out
    code, out, _ = call("verify", "theorem-disconnected", "--order", "5")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = call("verify", "transforms", "--trials", "20", "--seed", "3")
    assert code == 0


def test_verify_usage():
    assert call("verify", "oracle")[0] == 2
    assert call("verify", "theorem-main", "--order", "9")[0] == 2
    assert call("verify", "nonsense")[0] == 2


def test_export_dot():
    code, out, _ = call("export", "dot", "Ch", "--name", "P")
    assert code == 0 and out.startswith("graph P") and out.count("--") == 3


def test_malformed_input():
    code, _, err = call("inertia", "\x01\x02")
    assert code == 2 and "graph6" in err
    assert call("inertia", "B4(1,1,1)")[0] == 2
    assert call()[0] == 2


def test_parse_graph_both_forms():
    assert parse_graph("Ch") == path(4)
    assert parse_graph(" B4(1,1;1,1) ") == gn(4)
    assert parse_graph("Bg") == gn(3)
