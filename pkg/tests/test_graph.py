import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_graphs, to_nx
from diaglab import Graph, InvalidInputError, arrangement, hypercube
from diaglab.graph import (
    closed_neighborhood,
    common_neighbors,
    components,
    distance,
    induced_subgraph,
    is_vertex_cut,
    iter_bits,
    mask_of,
    open_neighborhood,
    set_of,
)


def test_bit_helpers_roundtrip():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001
    assert set_of(0b101001) == frozenset({0, 3, 5})


def test_rejects_asymmetric_and_loops():
    with pytest.raises(InvalidInputError):
        Graph(("a", "b"), (0b10, 0b00))
    with pytest.raises(InvalidInputError):
        Graph(("a",), (0b1,))
    with pytest.raises(InvalidInputError):
        Graph(("a", "a"), (0b10, 0b01))
    with pytest.raises(InvalidInputError):
        Graph.from_edges(["a", "b"], [(0, 1), (1, 0)])


def test_json_roundtrip(a42):
    text = a42.to_json()
    back = Graph.from_json(text)
    assert back == a42
    assert json.loads(text)["labels"][0] == "[1,2]"


def test_pickle_roundtrip(q3):
    import pickle

    assert pickle.loads(pickle.dumps(q3)) == q3


def test_q3_neighbourhoods(q3):
    v = q3.index("000")
    assert open_neighborhood(q3, [v]) == q3.vset("001", "010", "100")
    assert closed_neighborhood(q3, [v]) == q3.vset("000", "001", "010", "100")


def test_a42_distances_and_common_neighbours(a42):
    u = a42.index([1, 2])
    assert common_neighbors(a42, u, a42.index([1, 3])) == a42.vset([1, 4])
    assert common_neighbors(a42, u, a42.index([3, 4])) == a42.vset([1, 4], [3, 2])
    assert distance(a42, u, a42.index([3, 4])) == 2
    # [3,2] is adjacent to both [1,2] and [3,1]
    assert common_neighbors(a42, u, a42.index([3, 1])) == a42.vset([3, 2])


def test_common_neighbors_same_vertex_raises(q3):
    with pytest.raises(InvalidInputError):
        common_neighbors(q3, 0, 0)


def test_vertex_cut(q3):
    assert is_vertex_cut(q3, q3.vset("001", "010", "100"))
    assert not is_vertex_cut(q3, q3.vset("001", "010"))
    with pytest.raises(InvalidInputError):
        is_vertex_cut(q3, range(8))


def test_distance_unreachable():
    g = Graph.from_edges(["a", "b", "c"], [(0, 1)])
    assert distance(g, 0, 2) is None
    assert components(g, []) == [frozenset({0, 1}), frozenset({2})]


def test_induced_subgraph(q3):
    h = induced_subgraph(q3, q3.vset("000", "001", "011"))
    assert h.labels == ("000", "001", "011")
    assert h.edges() == [(0, 1), (1, 2)]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_components_match_networkx(g, data):
    f = data.draw(st.sets(st.integers(0, g.vertex_count - 1), max_size=g.vertex_count - 1))
    h = to_nx(g)
    h.remove_nodes_from(f)
    want = sorted((frozenset(c) for c in nx.connected_components(h)), key=min)
    assert components(g, f) == want


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_distance_matches_networkx(g, data):
    u = data.draw(st.integers(0, g.vertex_count - 1))
    v = data.draw(st.integers(0, g.vertex_count - 1))
    assert distance(g, u, v) == nx.shortest_path_length(to_nx(g), u, v)


def test_hypercube_matches_networkx():
    h = nx.hypercube_graph(4)
    g = hypercube(4)
    relabel = {v: g.index("".join(map(str, v))) for v in h}
    assert nx.is_isomorphic(nx.relabel_nodes(h, relabel), to_nx(g))
    assert sorted(nx.relabel_nodes(h, relabel).edges()) == sorted(
        tuple(sorted(e)) for e in to_nx(g).edges()
    )


def test_arrangement_edge_rule(a42):
    for u, v in a42.edges():
        p, q = a42.labels[u], a42.labels[v]
        assert sum(a != b for a, b in zip(p.strip("[]").split(","), q.strip("[]").split(","))) == 1
    assert arrangement(4, 2).edge_count() == 24
