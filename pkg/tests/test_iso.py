import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from graphinertia.errors import UnsupportedOrder
from graphinertia.graph import BkSpec, complete, empty, gn, induced_subgraph, path, realize_bk, star
from graphinertia.iso import (canonical_code, canonical_form, contains_induced, find_isomorphism,
                              graph_from_code, induced_copy, isomorphic)


def test_isomorphic_examples():
    p = path(4)
    assert isomorphic(p, p.relabel([3, 2, 1, 0]))
    assert not isomorphic(star(3), p)
    assert isomorphic(gn(4), p)
    with pytest.raises(UnsupportedOrder):
        isomorphic(complete(11), complete(11))


@given(graphs(max_order=8), st.randoms(use_true_random=False))
@settings(max_examples=100)
def test_mapping_is_an_isomorphism(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    m = find_isomorphism(g, h)
    assert m is not None
    assert all(g.has_edge(u, v) == h.has_edge(m[u], m[v]) for u in range(g.order) for v in range(g.order))


@given(graphs(max_order=6), graphs(max_order=6), graphs(max_order=6))
@settings(max_examples=100)
def test_equivalence_relation(a, b, c):
    assert isomorphic(a, a)
    assert isomorphic(a, b) == isomorphic(b, a)
    if isomorphic(a, b) and isomorphic(b, c):
        assert isomorphic(a, c)
    assert isomorphic(a, b) == (canonical_code(a) == canonical_code(b) and a.order == b.order)


def test_contains_induced_examples():
    assert contains_induced(gn(6), gn(5)) is not None
    assert contains_induced(complete(4), empty(2)) is None
    host = realize_bk(BkSpec.of(3, 2, 3, 2))
    found = contains_induced(host, path(4))
    assert found is not None
    assert all(path(4).has_edge(i, j) == host.has_edge(found[i], found[j])
               for i in range(4) for j in range(4))
    assert contains_induced(path(3), path(4)) is None


@given(graphs(1, 9), st.data())
@settings(max_examples=100)
def test_contains_induced_finds_planted_copy(g, data):
    k = data.draw(st.integers(1, g.order))
    sub = sorted(data.draw(st.sets(st.integers(0, g.order - 1), min_size=k, max_size=k)))
    pattern = induced_subgraph(g, sub)
    found = contains_induced(g, pattern)
    assert found is not None
    assert all(pattern.has_edge(i, j) == g.has_edge(found[i], found[j])
               for i in range(k) for j in range(k))
    assert isomorphic(induced_copy(g, pattern), pattern)


@pytest.mark.parametrize("n", range(2, 14))
def test_gn_chain(n):
    assert contains_induced(gn(n + 1), gn(n)) is not None


def test_code_helpers():
    g = path(5)
    assert isomorphic(graph_from_code(5, canonical_code(g)), g)
    assert canonical_form(g) == canonical_form(g.relabel([4, 0, 3, 1, 2]))
    with pytest.raises(UnsupportedOrder):
        canonical_code(empty(12))
