import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extlab import families as F
from extlab.connectivity import (
    CapExceeded,
    bonds,
    connectivity_report,
    cyclic_cuts,
    cyclic_edge_connectivity,
    edge_connectivity,
    is_k_vertex_connected,
    is_super_cyclic,
    is_super_lambda,
    is_super_lambda2,
    is_uniform_cyclic,
    max_flow_value,
    min_cut_between,
    removable_edges,
    restricted_edge_connectivity,
    uniform_cyclic_verdict,
)
from extlab.graph import Graph, GraphError, cut_size, is_connected

from . import oracles
from .conftest import graphs

K4 = F.circulant(4, [1, 2, 3])
PRISM = F.circulant(6, [2, 4, 3])


def test_min_cut_between(petersen):
    assert min_cut_between(F.cycle(7), {0}, {1}).size == 2
    outer, inner = range(5), range(5, 10)
    cut = min_cut_between(petersen, outer, inner)
    assert cut.size == 5 and cut.side == frozenset(outer)
    assert max_flow_value(K4, {0}, {2}) == 3
    with pytest.raises(GraphError):
        max_flow_value(K4, {0}, {0, 1})


def test_edge_connectivity_examples(petersen):
    assert edge_connectivity(F.cycle(9)) == 2
    assert edge_connectivity(petersen) == 3
    assert edge_connectivity(F.circulant(10, [2, 8, 5])) == 3
    with pytest.raises(GraphError):
        edge_connectivity(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_super_lambda_examples(petersen):
    assert is_super_lambda(petersen)
    assert not is_super_lambda(F.cycle(6))
    assert is_super_lambda(K4)


def test_restricted_examples(petersen, k33):
    assert restricted_edge_connectivity(petersen) == (4, 4)
    assert restricted_edge_connectivity(k33) == (4, 4)
    assert restricted_edge_connectivity(PRISM) == (3, 4)
    with pytest.raises(GraphError):
        restricted_edge_connectivity(K4.__class__.from_edges(3, [(0, 1), (1, 2)]))


def test_super_lambda2_examples(petersen, dodecahedron):
    assert is_super_lambda2(petersen)
    assert not is_super_lambda2(F.cycle(8))
    assert is_super_lambda2(dodecahedron)


def test_cyclic_examples(petersen, dodecahedron, k33):
    assert cyclic_edge_connectivity(petersen) == (5, 5)
    assert cyclic_edge_connectivity(dodecahedron, transitive=True) == (5, 5)
    assert cyclic_edge_connectivity(K4) == (None, 3)
    # six vertices and girth four leave no room for two disjoint cycles
    assert cyclic_edge_connectivity(k33) == (None, 4)
    assert cyclic_edge_connectivity(PRISM) == (3, 3)
    assert cyclic_edge_connectivity(Graph.from_edges(3, [(0, 1), (1, 2)])) == (None, None)


def test_super_cyclic_examples(petersen, dodecahedron):
    assert is_super_cyclic(petersen)
    assert is_super_cyclic(dodecahedron, transitive=True)
    assert not is_super_cyclic(F.t_m(4))
    # every cyclic 4-cut of T_3 cuts off a single column quadrangle
    assert is_super_cyclic(F.t_m(3))
    with pytest.raises(GraphError):
        is_super_cyclic(K4)


def test_t3_cyclic_cuts_are_columns():
    g = F.t_m(3)
    cuts = list(cyclic_cuts(g, 4))
    columns = {frozenset(range(4 * j, 4 * j + 4)) for j in range(3)}
    sides = {c.side if len(c.side) == 4 else frozenset(range(12)) - c.side for c in cuts}
    assert sides == columns


def test_uniform_cyclic_examples(petersen):
    assert is_uniform_cyclic(petersen, 5)
    assert not uniform_cyclic_verdict(F.double_ladder("even", 4, "a1a4,b1b8,c1c4"), 5)
    assert uniform_cyclic_verdict(F.double_ladder("odd", 4, "a1b9,b1a4,c1c5"), 5)
    with pytest.raises(GraphError):
        removable_edges(petersen, 4)


def test_removable_edges_against_bonds():
    for g in (F.double_ladder("odd", 4, "a1c5,b1a4,c1b9"), F.t_m(4), F.gp(7, 2)):
        k, _ = cyclic_edge_connectivity(g)
        covered = {e for c in cyclic_cuts(g, k) for e in c.boundary}
        assert removable_edges(g, k) == frozenset(set(g.edges()) - covered)


def test_bond_cap():
    with pytest.raises(CapExceeded):
        list(bonds(F.named("dodecahedron"), 6, cap=1000))


def test_vertex_connectivity(petersen):
    assert is_k_vertex_connected(petersen, 3)
    assert not is_k_vertex_connected(petersen, 4)
    assert not is_k_vertex_connected(F.cycle(6), 3)


def test_report_fields(petersen):
    rep = connectivity_report(petersen).to_json()
    assert rep == {"lambda": 3, "super_lambda": True, "lambda2": 4, "xi2": 4, "super_lambda2": True,
                   "clambda": 5, "zeta": 5, "super_cyclic": True, "uniform_cyclic": True}
    rep = connectivity_report(K4).to_json()
    assert rep["clambda"] is None and rep["super_cyclic"] is None and rep["lambda2"] == 4


connected_graphs = graphs(min_n=3, max_n=9).filter(is_connected)


@settings(max_examples=80, deadline=None)
@given(connected_graphs)
def test_bonds_match_bipartitions(g):
    lam = edge_connectivity(g)
    assert lam == oracles.edge_lambda(g)
    for k in (lam, lam + 1):
        found = sorted(tuple(sorted(c.side)) for c in bonds(g, k))
        expected = []
        for side in oracles.bipartitions(g.n):
            other = [v for v in range(g.n) if v not in side]
            sub_a, _ = g.delete_vertices(other)
            sub_b, _ = g.delete_vertices(side)
            if oracles.d(g, side) == k and is_connected(sub_a) and is_connected(sub_b):
                expected.append(side)
        assert found == sorted(expected)


@settings(max_examples=80, deadline=None)
@given(connected_graphs)
def test_cyclic_matches_bipartition_oracle(g):
    assert cyclic_edge_connectivity(g)[0] == oracles.cyclic_lambda(g)


@settings(max_examples=60, deadline=None)
@given(connected_graphs)
def test_restricted_matches_oracle(g):
    try:
        lam2, _ = restricted_edge_connectivity(g)
    except GraphError:
        assert oracles.restricted_lambda(g) is None
        return
    assert lam2 == oracles.restricted_lambda(g)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=2, max_n=9), st.data())
def test_submodular_and_symmetric(g, data):
    x = data.draw(st.sets(st.integers(0, g.n - 1)))
    y = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert cut_size(g, x) + cut_size(g, y) >= cut_size(g, x | y) + cut_size(g, x & y)
    assert cut_size(g, x) == cut_size(g, set(range(g.n)) - x)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=9), st.data())
def test_regular_boundary_formula(g, data):
    k = g.regular_degree()
    if k is None:
        return
    x = data.draw(st.sets(st.integers(0, g.n - 1)))
    inside = sum(1 for u, v in g.edges() if u in x and v in x)
    assert cut_size(g, x) == k * len(x) - 2 * inside


def test_lambda_at_most_min_degree():
    for n, s in itertools.product((8, 10, 12), ([1, -1], [1, -1, 2, -2], [2, -2, 3, -3])):
        s = sorted({x % n for x in s})
        if F.is_circulant_connected(n, s):
            g = F.circulant(n, s)
            assert edge_connectivity(g) == g.min_degree()
