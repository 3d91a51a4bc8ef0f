import math

import networkx as nx
import pytest
from hypothesis import given, settings

from extlab import families
from extlab.graph import (
    Graph,
    GraphError,
    boundary,
    components,
    cut_size,
    girth,
    has_cycle,
    induced_cycles,
    induced_subgraph,
    is_bipartite,
    odd_components,
    second_neighborhood,
    vertex_set,
)

from .conftest import graphs, to_nx


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_construction_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [[1], []])


def test_edges_sorted_and_equality():
    g = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
    assert g.edges() == ((0, 1), (0, 2), (2, 3))
    assert g == Graph.from_edges(4, [(0, 1), (0, 2), (2, 3)])
    assert len({g, Graph.from_edges(4, [(0, 2), (2, 3), (0, 1)])}) == 1


def test_boundary_and_bitmask(petersen):
    cut = boundary(petersen, 0b11111)
    assert cut.size == 5 and cut.side == frozenset(range(5))
    assert cut_size(petersen, range(5)) == 5
    assert cut_size(petersen, []) == 0
    with pytest.raises(GraphError):
        boundary(petersen, [])
    with pytest.raises(GraphError):
        vertex_set(petersen, 1 << 10)


def test_girth_examples(petersen, k33):
    assert girth(petersen) == 5
    assert girth(k33) == 4
    assert girth(path(4)) == math.inf
    assert girth(families.circulant(4, [1, 2, 3])) == 3


def test_bipartite_and_components(k33, petersen):
    assert is_bipartite(k33) and not is_bipartite(petersen)
    g = Graph.from_edges(6, [(0, 1), (2, 3), (3, 4)])
    assert components(g) == [[0, 1], [2, 3, 4], [5]]
    assert odd_components(g) == 2
    assert odd_components(g, [3]) == 3


def test_second_neighborhood_petersen(petersen):
    n2 = second_neighborhood(petersen, 0)
    assert len(n2) == 6
    sub, _ = induced_subgraph(petersen, n2)
    # six vertices, six edges, 2-regular and triangle-free: a hexagon
    assert sub.m == 6 and set(sub.degrees()) == {2} and girth(sub) == 6


def test_has_cycle():
    assert not has_cycle(path(5))
    assert has_cycle(families.cycle(6))
    assert not has_cycle(families.cycle(6), [0, 1, 2])


def test_induced_cycles_dodecahedron_counts(dodecahedron):
    # frozen from networkx.chordless_cycles
    counts = {}
    for c in induced_cycles(dodecahedron):
        counts[len(c)] = counts.get(len(c), 0) + 1
    assert counts == {5: 12, 9: 20, 10: 36, 11: 60, 12: 40}


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_induced_cycles_match_networkx(g):
    ours = sorted(tuple(sorted(c)) for c in induced_cycles(g))
    theirs = sorted(tuple(sorted(c)) for c in nx.chordless_cycles(to_nx(g)) if len(c) >= 3)
    assert ours == theirs


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_girth_matches_networkx(g):
    assert girth(g) == nx.girth(to_nx(g))


@settings(max_examples=50, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_cut_symmetric(g):
    side = [v for v in range(g.n) if v % 2 == 0]
    other = [v for v in range(g.n) if v % 2]
    assert cut_size(g, side) == cut_size(g, other)
