import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from graphinertia.errors import InvalidArgument
from graphinertia.graph import complete, complete_multipartite, cycle, empty, path
from graphinertia.iso import isomorphic
from graphinertia.spectra import Inertia, inertia_exact
from graphinertia.transforms import (TransformKind, add_type1, add_type2, add_type3,
                                     congruent_kinds, delete_congruent, find_type1, find_type2,
                                     find_type3, is_congruent_quadrangle)
from graphinertia.verification import random_instance

P4 = path(4)


def test_type1_examples():
    assert len(find_type1(complete_multipartite([2, 3]))) == 4
    assert find_type1(P4) == []
    h1, cert = add_type1(P4, 0)
    assert (4, 0) == cert.witness and (0, 4) in find_type1(h1)
    assert cert.before == Inertia(2, 2, 0) and cert.after == Inertia(2, 2, 1)
    g, cert = add_type1(complete(1), 0)
    assert g == empty(2) and cert.after == Inertia(0, 0, 2)
    g, cert = add_type1(complete(3), 0)
    assert cert.before == Inertia(1, 2, 0) and cert.after == Inertia(1, 2, 1)


def test_type2_examples():
    h2, cert = add_type2(P4, 0, 3)
    assert (4, 0, 3) in find_type2(h2)
    assert cert.after == Inertia(2, 2, 1)
    assert find_type2(complete(5)) == []
    # P5 as 0-1-2-3-4: the middle vertex joins the neighborhoods of the ends
    assert find_type2(path(5)) == [(2, 0, 4)]
    g, cert = add_type2(empty(2), 0, 1)
    assert cert.before == Inertia(0, 0, 2) and cert.after == Inertia(0, 0, 3)


def test_type2_rejects_overlapping_neighborhoods():
    # antipodal vertices of C4 share both neighbors
    with pytest.raises(InvalidArgument):
        add_type2(cycle(4), 0, 2)
    with pytest.raises(InvalidArgument):
        add_type2(P4, 0, 1)
    with pytest.raises(InvalidArgument):
        add_type2(P4, 2, 2)


def test_type3_examples():
    # P4 read as w-v-x-y; u joins w, v and y
    h3, cert = add_type3(P4, 1, 2, 3)
    assert sorted(h3.neighbors(4)) == [0, 1, 3]
    assert cert.after == Inertia(2, 2, 1)
    quads = find_type3(h3)
    assert len(quads) == 1 and set(quads[0]) == {1, 2, 3, 4}
    assert find_type3(cycle(4)) == [(0, 1, 2, 3), (0, 3, 2, 1)]
    assert find_type3(P4) == []


def test_type3_on_p3_closes_a_quadrangle():
    g, cert = add_type3(path(3), 0, 1, 2)
    assert isomorphic(g, cycle(4))
    assert cert.before == Inertia(1, 1, 1) and cert.after == Inertia(1, 1, 2)


def test_type3_preconditions():
    with pytest.raises(InvalidArgument):
        add_type3(P4, 0, 1, 3)
    with pytest.raises(InvalidArgument):
        add_type3(cycle(4), 0, 1, 3)
    # N(x) - {y, v} must match N(y) - {x}
    with pytest.raises(InvalidArgument):
        add_type3(path(5), 0, 1, 2)


def test_delete_examples():
    h1, _ = add_type1(P4, 0)
    back, cert = delete_congruent(h1, 4, "I")
    assert back == P4 and cert.after == Inertia(2, 2, 0)
    h3, _ = add_type3(P4, 1, 2, 3)
    assert delete_congruent(h3, 4, TransformKind.III)[0] == P4
    g, cert = delete_congruent(complete_multipartite([2, 2]), 0, "I")
    assert isomorphic(g, complete_multipartite([1, 2]))
    assert cert.before == Inertia(1, 1, 2) and cert.after == Inertia(1, 1, 1)
    with pytest.raises(InvalidArgument):
        delete_congruent(P4, 0, "I")


def test_certificate_json():
    _, cert = add_type2(P4, 0, 3)
    d = json.loads(cert.to_json())
    assert d == {"kind": "II", "witness": [4, 0, 3], "before": [2, 2, 0], "after": [2, 2, 1]}


@given(graphs(max_order=9))
@settings(max_examples=100)
def test_reported_witnesses_recheck(g):
    for u, v in find_type1(g):
        assert u < v and g.adj[u] == g.adj[v] and not g.has_edge(u, v)
    for u, v, w in find_type2(g):
        assert v < w and g.is_independent((1 << u) | (1 << v) | (1 << w))
        assert g.adj[v] & g.adj[w] == 0 and g.adj[u] == g.adj[v] | g.adj[w]
    for q in find_type3(g):
        assert is_congruent_quadrangle(g, *q)


@given(graphs(max_order=9))
@settings(max_examples=100)
def test_deleting_any_congruent_vertex_drops_nullity(g):
    i = inertia_exact(g)
    for u in range(g.order):
        for kind in congruent_kinds(g, u):
            _, cert = delete_congruent(g, u, kind)
            assert cert.before == i
            assert cert.after == Inertia(i.p, i.n_neg, i.eta - 1)


@pytest.mark.parametrize("kind", list(TransformKind))
def test_random_additions_are_certified(kind):
    rng = random.Random(11)
    add = {TransformKind.I: add_type1, TransformKind.II: add_type2, TransformKind.III: add_type3}[kind]
    for _ in range(200):
        g, wit = random_instance(rng, kind)
        h, cert = add(g, *wit)
        b = inertia_exact(g)
        assert inertia_exact(h) == Inertia(b.p, b.n_neg, b.eta + 1)
        assert delete_congruent(h, g.order, kind)[0] == g
