import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from graphinertia.errors import InvalidArgument
from graphinertia.graph import (BkSpec, Graph, canonical_decomposition, complete,
                                complete_multipartite, components, cycle, empty, gn,
                                induced_subgraph, is_connected, k_joining, lex_product,
                                min_degree, path, pendant_vertices, realize_bk, star)
from graphinertia.iso import find_isomorphism, isomorphic


def test_graph_rejects_asymmetric_and_loops():
    with pytest.raises(InvalidArgument):
        Graph(2, (0b10, 0))
    with pytest.raises(InvalidArgument):
        Graph(1, (1,))
    with pytest.raises(InvalidArgument):
        Graph(2, (0b100, 0))


def test_complete_multipartite():
    assert complete_multipartite([1, 1, 1]) == complete(3)
    assert complete_multipartite([4]).edge_count == 0
    k23 = complete_multipartite([2, 3])
    assert k23.edge_count == 6
    assert sorted(k23.degrees(), reverse=True) == [3, 3, 2, 2, 2]
    with pytest.raises(InvalidArgument):
        complete_multipartite([2, 0])
    with pytest.raises(InvalidArgument):
        complete_multipartite([])


def test_gn_small_cases():
    assert gn(2) == empty(2)
    assert isomorphic(gn(3), path(3))
    assert isomorphic(gn(4), path(4))
    with pytest.raises(InvalidArgument):
        gn(1)


@pytest.mark.parametrize("n", range(2, 16))
def test_gn_edge_count_and_nesting(n):
    g = gn(n)
    a, b = (n + 1) // 2, n // 2
    s = b
    cross = sum(1 for i in range(1, a + 1) for j in range(1, b + 1) if i + j >= s + 2)
    assert g.order == n
    assert g.edge_count == a * (a - 1) // 2 + b * (b - 1) // 2 + cross
    vs = range(a)
    ws = range(a, n)
    nw = [g.adj[v] & sum(1 << w for w in ws) for v in vs]
    # N_W(v_1) is empty and each later v sees a superset
    assert nw[0] == 0
    assert all(x & y == x for x, y in zip(nw, nw[1:]))
    if n % 2:
        assert nw[-1] == sum(1 << w for w in ws)


def test_lex_product_examples():
    assert lex_product(complete(2), [2, 3]) == complete(5)
    g = lex_product(path(3), [1, 1, 2])
    assert g.order == 4
    assert g.degree(1) == 3
    assert g.has_edge(2, 3) and not g.has_edge(0, 2) and not g.has_edge(0, 3)
    assert realize_bk(BkSpec.of(3, 2, 3, 2)).order == 10
    with pytest.raises(InvalidArgument):
        lex_product(path(3), [1, 2])


@given(graphs(max_order=8))
def test_lex_product_all_ones_is_identity(g):
    assert lex_product(g, [1] * g.order) == g


@given(graphs(1, 6), st.data())
@settings(max_examples=50)
def test_lex_product_representatives_induce_base(g, data):
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=g.order, max_size=g.order))
    big = lex_product(g, sizes)
    starts = [sum(sizes[:i]) for i in range(g.order)]
    assert induced_subgraph(big, starts) == g


def test_bkspec_layout_and_text():
    spec = BkSpec.parse("B5(2, 2; 2,2; 1)")
    assert spec.parts == (2, 2, 2, 2, 1)
    assert str(spec) == "B5(2,2; 2,2; 1)"
    assert BkSpec.parse("B_{4}(3,2;3,2)") == BkSpec.of(3, 2, 3, 2)
    # odd k: last part sits on v_{s+1}, placed after v_1..v_s
    assert BkSpec.of(1, 2, 3, 4, 5).vertex_sizes() == [1, 2, 5, 3, 4]
    assert realize_bk(BkSpec.of(*[1] * 13)) == gn(13)
    assert realize_bk(BkSpec.parse("B6(1,2,2;1,2,2)")).order == 10
    for bad in ("B5(2,2;2,2)", "B4(1,2,3,4)", "C4(1,1;1,1)", "B4(1,x;1,1)", "B4(0,1;1,1)"):
        with pytest.raises(InvalidArgument):
            BkSpec.parse(bad)


@pytest.mark.parametrize("k", range(4, 14))
def test_half_swap_is_an_isomorphism(k):
    parts = tuple(1 + i % 3 for i in range(k))
    spec = BkSpec(k, parts)
    a, b = realize_bk(spec), realize_bk(spec.swapped())
    assert find_isomorphism(a, b) is not None


def test_k_joining():
    g = k_joining(2, complete(2), [0, 1])
    assert g.order == 5 and g.degree(0) == 4 and pendant_vertices(g) == [1, 2]
    assert isomorphic(k_joining(2, complete(1), [0]), star(3))
    h = k_joining(1, complete_multipartite([2, 1]), [0, 1, 2])
    assert h.order == 5 and pendant_vertices(h) == [1]
    with pytest.raises(InvalidArgument):
        k_joining(1, complete(2), [])


def test_canonical_decomposition_examples():
    d = canonical_decomposition(complete(5))
    assert d.canonical.order == 1 and d.class_sizes == (5,)
    d = canonical_decomposition(path(4))
    assert d.canonical == path(4) and d.class_sizes == (1, 1, 1, 1)
    g = realize_bk(BkSpec.of(3, 2, 3, 2))
    d = canonical_decomposition(g)
    assert isomorphic(d.canonical, gn(4))
    assert sorted(d.class_sizes) == [2, 2, 3, 3]
    assert find_isomorphism(d.reconstruct(), g) is not None


@given(graphs(max_order=9))
@settings(max_examples=80)
def test_canonical_decomposition_reconstructs_and_is_idempotent(g):
    d = canonical_decomposition(g)
    assert sum(d.class_sizes) == g.order
    # listing g's vertices block by block gives the expansion exactly
    order = d.blockwise_order()
    assert g.relabel([order.index(v) for v in range(g.order)]) == d.reconstruct()
    assert find_isomorphism(d.reconstruct(), g) is not None
    again = canonical_decomposition(d.canonical)
    assert again.canonical == d.canonical and set(again.class_sizes) <= {1}


def test_induced_subgraph_examples():
    assert induced_subgraph(complete(4), [0, 2, 3]) == complete(3)
    assert induced_subgraph(path(4), [1, 3]) == empty(2)
    # v_3 is the maximum-degree vertex of G_5; the other four induce G_4
    g5 = gn(5)
    assert g5.degree(2) == max(g5.degrees())
    assert isomorphic(induced_subgraph(g5, [0, 1, 3, 4]), gn(4))
    with pytest.raises(InvalidArgument):
        induced_subgraph(path(3), [0, 5])


def test_components_and_degrees():
    g = complete(3) + complete(2) + complete(1)
    assert components(g) == [[0, 1, 2], [3, 4], [5]]
    assert not is_connected(g)
    assert pendant_vertices(path(4)) == [0, 3]
    g5 = gn(5)
    assert min_degree(g5) == g5.degree(0)
    assert is_connected(cycle(5))


@pytest.mark.parametrize("n", range(2, 14))
def test_gn_chain_by_extreme_degree_deletion(n):
    g = gn(n + 1)
    deg = g.degrees()
    target = max(deg) if (n + 1) % 2 else min(deg)
    v = deg.index(target)
    assert find_isomorphism(g.delete_vertices([v]), gn(n)) is not None
