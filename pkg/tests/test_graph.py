import networkx as nx
import pytest
from hypothesis import given

import oracles
from conftest import graph_and_subset, graphs
from offalliance.errors import DomainError, InputError
from offalliance.generators import complete, cycle, path, petersen, cocktail_party
from offalliance.graph import Graph


def test_degree_examples():
    g = cocktail_party(3)
    assert {g.degree(v) for v in g.vertices()} == {4}
    assert Graph(1).degree(0) == 0
    assert {petersen().degree(v) for v in range(10)} == {3}


def test_degree_out_of_range():
    with pytest.raises(InputError):
        path(3).degree(3)
    with pytest.raises(InputError):
        path(3).neighbors_in(-1, [0])


@pytest.mark.parametrize("v, s, expected", [(1, {0, 2}, {0, 2}), (1, set(), set())])
def test_neighbors_in_path(v, s, expected):
    assert path(3).neighbors_in(v, s) == expected


def test_neighbors_in_cycle():
    assert cycle(5).neighbors_in(0, {1, 2}) == {1}


def test_rejects_loops_and_duplicates():
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(0)


def test_induced_subgraph_examples():
    k3, relabel = complete(4).induced_subgraph({0, 2, 3})
    assert k3 == complete(3)
    assert relabel == {0: 0, 2: 1, 3: 2}
    p3, _ = cycle(5).induced_subgraph({1, 2, 3})
    assert p3 == path(3)
    g = petersen()
    assert g.induced_subgraph(range(10))[0] == g
    with pytest.raises(InputError):
        g.induced_subgraph(set())


def test_connectivity_examples():
    assert cycle(5).is_connected()
    assert not Graph(4, [(0, 1), (2, 3)]).is_connected()
    assert Graph(1).is_connected()


def test_diameter_examples():
    assert all(complete(n).diameter() == 1 for n in range(2, 7))
    assert path(4).diameter() == 3
    assert petersen().diameter() == 2
    with pytest.raises(DomainError):
        Graph(4, [(0, 1), (2, 3)]).diameter()


@given(graph_and_subset(nonempty=False))
def test_neighborhood_splits(gs):
    g, s = gs
    rest = set(range(g.n)) - s
    for v in g.vertices():
        a, b = g.neighbors_in(v, s), g.neighbors_in(v, rest)
        assert a | b == g.neighbors(v)
        assert not a & b


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degrees()) == 2 * g.m


@given(graphs())
def test_connectivity_and_diameter_match_networkx(g):
    h = oracles.to_nx(g)
    assert g.is_connected() == nx.is_connected(h)
    if g.is_connected():
        assert g.diameter() == nx.diameter(h)


@given(graph_and_subset())
def test_induced_connectivity_matches_networkx(gs):
    g, s = gs
    assert g.mask_is_connected(g.mask(s)) == nx.is_connected(oracles.to_nx(g).subgraph(s))


def test_graph_is_hashable_and_immutable():
    g = petersen()
    assert hash(g) == hash(petersen())
    with pytest.raises(AttributeError):
        g.n = 3
