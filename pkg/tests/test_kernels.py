import random

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import graphs
from graphinertia import _pykernels, kernels
from graphinertia.graph import Graph


def test_backend_switching():
    prev = kernels.use_backend("python")
    try:
        assert kernels.backend_name() == "python"
        with pytest.raises(ValueError):
            kernels.use_backend("fortran")
    finally:
        kernels.use_backend(prev)
    assert kernels.backend_name() == prev


needs_compiled = pytest.mark.skipif(not kernels.compiled_available(), reason="compiled kernels not built")


@needs_compiled
@given(graphs(max_order=12))
@settings(max_examples=300)
def test_compiled_inertia_matches_python(g):
    from graphinertia import _ckernels
    assert _ckernels.inertia_counts(g.adj, g.order) == _pykernels.inertia_counts(g.adj, g.order)


@needs_compiled
def test_compiled_inertia_matches_python_larger():
    from graphinertia import _ckernels
    rng = random.Random(7)
    for n in (20, 33, 48, 64):
        for _ in range(3):
            mask = rng.getrandbits(n * (n - 1) // 2)
            rows = kernels.rows_from_pairs(n, mask)
            assert _ckernels.inertia_counts(rows, n) == _pykernels.inertia_counts(rows, n)


@needs_compiled
@given(graphs(max_order=9))
@settings(max_examples=300)
def test_compiled_code_matches_python(g):
    from graphinertia import _ckernels
    assert _ckernels.canonical_code(g.adj, g.order) == _pykernels.canonical_code(g.adj, g.order)


@given(graphs(max_order=9))
@settings(max_examples=100)
def test_code_round_trip_is_isomorphic(g):
    from graphinertia.iso import find_isomorphism
    code = kernels.canonical_code(g.adj, g.order)
    h = Graph(g.order, tuple(kernels.rows_from_code(g.order, code)))
    assert find_isomorphism(g, h) is not None
    assert kernels.canonical_code(h.adj, h.order) == code


@given(graphs(1, 9))
@settings(max_examples=100)
def test_code_is_relabeling_invariant(g):
    rng = random.Random(g.edge_count)
    perm = list(range(g.order))
    rng.shuffle(perm)
    assert kernels.canonical_code(g.relabel(perm).adj, g.order) == kernels.canonical_code(g.adj, g.order)


# numbers of graphs on n unlabelled vertices
@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_unlabelled_counts(backend, n, count):
    codes = np.asarray(kernels.labelled_codes(n), dtype=np.uint64)
    assert len(codes) == 1 << (n * (n - 1) // 2)
    assert len(np.unique(codes)) == count


@needs_compiled
def test_unlabelled_count_order7():
    assert len(np.unique(kernels.labelled_codes(7))) == 1044


def test_pair_mask_layout():
    # pair (i, j) with i < j is bit j(j-1)/2 + i
    rows = kernels.rows_from_pairs(4, 1 << 3 + 1)
    assert rows[1] == 1 << 3 and rows[3] == 1 << 1
