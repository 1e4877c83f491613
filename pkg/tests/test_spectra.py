import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from graphinertia.errors import InvalidArgument, NumericFailure
from graphinertia.graph import (complete, complete_multipartite, cycle, disjoint_union, empty,
                                induced_subgraph, path, pendant_vertices)
from graphinertia.spectra import (Inertia, eigenvalues_float, inertia_exact, inertia_float,
                                  inertia_of_matrix, jacobi_eigenvalues, multipartite_inertia)


def test_small_exact_values():
    assert inertia_exact(complete(1)) == Inertia(0, 0, 1)
    assert inertia_exact(empty(0)) == Inertia(0, 0, 0)
    for s in range(2, 9):
        assert inertia_exact(complete(s)) == Inertia(1, s - 1, 0)
    assert inertia_exact(path(4)) == Inertia(2, 2, 0)
    assert inertia_exact(complete_multipartite([2, 3])) == Inertia(1, 1, 3)
    assert inertia_exact(cycle(4)) == Inertia(1, 1, 2)


def test_inertia_fields():
    i = Inertia(2, 3, 1)
    assert i.order == 6 and i.rank == 5
    assert i + Inertia(1, 1, 1) == Inertia(3, 4, 2)
    assert str(i) == "p=2 n=3 eta=1"


def test_rational_matrix_inertia():
    m = [[Fraction(1, 2), 1, 0], [1, 0, 3], [0, 3, -2]]
    vals = np.linalg.eigvalsh(np.array(m, dtype=float))
    assert inertia_of_matrix(m) == Inertia(int((vals > 0).sum()), int((vals < 0).sum()), 0)
    with pytest.raises(InvalidArgument):
        inertia_of_matrix([[0, 1], [2, 0]])


def test_float_spectra():
    vals = eigenvalues_float(path(4)).values
    assert vals == pytest.approx([1.6180, 0.6180, -0.6180, -1.6180], abs=1e-3)
    assert list(vals) == sorted(vals, reverse=True)
    assert eigenvalues_float(complete(2)).values == pytest.approx([1.0, -1.0], abs=1e-12)
    assert inertia_float(empty(5)) == Inertia(0, 0, 5)
    with pytest.raises(InvalidArgument):
        eigenvalues_float(empty(0))
    with pytest.raises(InvalidArgument):
        inertia_float(path(3), tol=0)


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(12, 12))
    a = a + a.T
    assert jacobi_eigenvalues(a) == pytest.approx(np.sort(np.linalg.eigvalsh(a))[::-1], abs=1e-9)


def test_jacobi_sweep_cap():
    a = np.array([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(NumericFailure):
        jacobi_eigenvalues(a, max_sweeps=0)


def test_multipartite_formula_examples():
    assert multipartite_inertia([2, 2, 1]) == Inertia(1, 2, 2)
    assert multipartite_inertia([1, 1]) == Inertia(1, 1, 0)
    assert multipartite_inertia([3]) == Inertia(0, 0, 3)


def _parts_upto(total):
    def rec(left, mx):
        if left == 0:
            yield []
            return
        for x in range(min(left, mx), 0, -1):
            for rest in rec(left - x, x):
                yield [x] + rest
    for n in range(1, total + 1):
        yield from rec(n, n)


def test_multipartite_formula_exhaustive():
    for parts in _parts_upto(10):
        assert multipartite_inertia(parts) == inertia_exact(complete_multipartite(parts))


@given(graphs(max_order=8))
@settings(max_examples=200)
def test_exact_matches_float(g):
    assert inertia_exact(g) == inertia_float(g)


@given(graphs(max_order=10), st.randoms(use_true_random=False))
@settings(max_examples=100)
def test_isomorphism_invariance(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    i = inertia_exact(g)
    assert inertia_exact(g.relabel(perm)) == i
    assert i.order == g.order


@given(graphs(2, 10))
@settings(max_examples=150)
def test_pendant_reduction(g):
    for v in pendant_vertices(g):
        u = g.neighbors(v)[0]
        assert inertia_exact(g) == inertia_exact(g.delete_vertices([u, v])) + Inertia(1, 1, 0)


@given(graphs(1, 10), st.randoms(use_true_random=False))
@settings(max_examples=150)
def test_interlacing(g, rnd):
    sub = [v for v in range(g.order) if rnd.random() < 0.6]
    h, i = inertia_exact(induced_subgraph(g, sub)), inertia_exact(g)
    assert h.p <= i.p and h.n_neg <= i.n_neg


@given(graphs(max_order=6), graphs(max_order=6))
@settings(max_examples=80)
def test_disjoint_union_adds(a, b):
    assert inertia_exact(disjoint_union(a, b)) == inertia_exact(a) + inertia_exact(b)
