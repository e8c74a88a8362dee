import pytest
from hypothesis import given, settings

from conftest import graphs
from vizing.errors import CapExceededError
from vizing.graph import (complete_graph, cycle_graph, empty_graph, erdos_renyi,
                          is_dominating, members, path_graph, vset)
from vizing.product import (cartesian_product, project_to_g, project_to_h, transposed)
from vizing.solver import gamma_bruteforce, gamma_exact


def test_k1_identity():
    h = cycle_graph(5)
    assert cartesian_product(empty_graph(1), h).graph == h
    assert cartesian_product(h, empty_graph(1)).graph == h


def test_p2_p2_is_c4():
    pg = cartesian_product(path_graph(2), path_graph(2))
    g = pg.graph
    assert g.n == 4 and g.num_edges == 4
    assert all(g.degree(x) == 2 for x in range(4))
    # (0,0)-(0,1), (1,0)-(1,1), (0,0)-(1,0), (0,1)-(1,1)
    assert g.edges() == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_p3_p3_edges():
    pg = cartesian_product(path_graph(3), path_graph(3))
    assert pg.graph.n == 9 and pg.graph.num_edges == 12


def test_cap():
    with pytest.raises(CapExceededError):
        cartesian_product(empty_graph(65), empty_graph(64))


def test_flat_roundtrip():
    pg = cartesian_product(path_graph(3), path_graph(5))
    for x in range(15):
        assert pg.flat(*pg.unflat(x)) == x
    assert pg.unflat(pg.flat(2, 4)) == (2, 4)


def test_rectangle_column_row():
    pg = cartesian_product(path_graph(3), path_graph(4))
    assert members(pg.column(1)) == [4, 5, 6, 7]
    assert members(pg.row(2)) == [2, 6, 10]
    assert members(pg.rectangle(vset([0, 2]), vset([1, 3]))) == [1, 3, 9, 11]


class TestProjection:
    def test_empty(self):
        pg = cartesian_product(path_graph(2), path_graph(2))
        assert project_to_g(pg, 0) == 0 and project_to_h(pg, 0) == 0

    def test_to_g(self):
        pg = cartesian_product(path_graph(2), path_graph(2))
        assert project_to_g(pg, vset([pg.flat(0, 0), pg.flat(0, 1)])) == vset([0])
        assert project_to_g(pg, vset([pg.flat(0, 1), pg.flat(1, 0)])) == vset([0, 1])

    def test_to_h(self):
        pg = cartesian_product(path_graph(2), path_graph(2))
        assert project_to_h(pg, vset([pg.flat(0, 0), pg.flat(1, 0)])) == vset([0])
        pg = cartesian_product(path_graph(2), path_graph(3))
        assert project_to_h(pg, vset([pg.flat(1, 2)])) == vset([2])


def test_edge_count_identity_random():
    for i in range(100):
        g = erdos_renyi(1 + i % 9, 0.4, 1000 + i)
        h = erdos_renyi(1 + (i * 7) % 11, 0.6, 2000 + i)
        pg = cartesian_product(g, h)
        assert pg.graph.n == g.n * h.n
        assert pg.graph.num_edges == g.n * h.num_edges + h.n * g.num_edges


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_degree_identity(g, h):
    pg = cartesian_product(g, h)
    for u in range(g.n):
        for v in range(h.n):
            assert pg.graph.degree(pg.flat(u, v)) == g.degree(u) + h.degree(v)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_commutative_under_transpose(g, h):
    gh = cartesian_product(g, h)
    hg = cartesian_product(h, g)
    assert transposed(gh) == hg
    for x in range(gh.graph.n):
        y = gh.transpose_index(x)
        assert hg.graph.rows[y] == gh.transpose_set(gh.graph.rows[x])


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), graphs(max_n=5))
def test_dominating_times_whole_factor(g, h):
    pg = cartesian_product(g, h)
    dg = gamma_exact(g).witness
    d = pg.rectangle(dg, h.full)
    assert is_dominating(pg.graph, d)
    assert gamma_exact(pg.graph).gamma <= dg.bit_count() * h.n
