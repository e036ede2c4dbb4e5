import itertools

import networkx as nx
import pytest

from conftest import to_nx
from diaglab import InvalidInputError, TopologySpec, arrangement, hypercube, nk_star
from diaglab.topology import (
    arrangement_common_neighbor_count,
    check_exact_common_neighbors,
    check_lemma_common_neighbors,
    cross_edge_count,
    decompose_by_last_symbol,
    exact_common_neighbor_count,
    expected_counts,
    expected_cross_edges,
    hypercube_bit_split,
    perm_of,
)

PERM_PARAMS = [(4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (6, 3)]


@pytest.mark.parametrize("n", range(1, 7))
def test_hypercube_counts(n):
    g = hypercube(n)
    assert (g.vertex_count, g.edge_count(), g.degree(0)) == expected_counts("hypercube", n)
    assert all(g.degree(v) == n for v in range(g.vertex_count))


@pytest.mark.parametrize("family", ["nk_star", "arrangement"])
@pytest.mark.parametrize("n,k", PERM_PARAMS)
def test_perm_family_counts_and_regularity(family, n, k):
    g = TopologySpec(family, n, k).build()
    v, e, d = expected_counts(family, n, k)
    assert g.vertex_count == v
    assert g.edge_count() == e
    assert {g.degree(x) for x in range(v)} == {d}


def test_known_sizes():
    assert nk_star(4, 2).vertex_count == 12 and nk_star(4, 2).edge_count() == 18
    assert arrangement(4, 2).vertex_count == 12
    assert hypercube(3).to_dict()["labels"][:2] == ["000", "001"]


@pytest.mark.parametrize(
    "g,kappa",
    [(hypercube(4), 4), (nk_star(4, 2), 3), (nk_star(5, 3), 4), (arrangement(4, 2), 4), (arrangement(5, 3), 6)],
)
def test_vertex_connectivity_networkx(g, kappa):
    assert nx.node_connectivity(to_nx(g)) == kappa


def test_star_graph_special_cases():
    # S_{n,n-1} is the star graph, S_{n,1} is complete
    assert nx.is_isomorphic(to_nx(nk_star(4, 1)), nx.complete_graph(4))
    assert to_nx(arrangement(4, 1)).number_of_edges() == 6


@pytest.mark.parametrize("family", ["nk_star", "arrangement"])
@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (5, 2)])
def test_block_decomposition(family, n, k):
    g = TopologySpec(family, n, k).build()
    blocks = decompose_by_last_symbol(g)
    assert sorted(blocks) == list(range(1, n + 1))
    assert sum(len(b) for b in blocks.values()) == g.vertex_count
    smaller = to_nx(TopologySpec(family, n - 1, k - 1).build()) if k > 1 and n - 1 > k - 1 else None
    for i, j in itertools.combinations(blocks, 2):
        assert cross_edge_count(g, blocks[i], blocks[j]) == expected_cross_edges(family, n, k)
    for b in blocks.values():
        assert all(perm_of(g, v)[-1] == perm_of(g, next(iter(b)))[-1] for v in b)
        if smaller is not None:
            assert nx.is_isomorphic(to_nx(g).subgraph(b), smaller)


def test_hypercube_bit_split():
    g = hypercube(4)
    low, high = hypercube_bit_split(g, 0)
    assert g.index("0111") in low and g.index("1000") in high
    assert cross_edge_count(g, low, high) == 8
    assert nx.is_isomorphic(to_nx(g).subgraph(low), nx.hypercube_graph(3))
    with pytest.raises(InvalidInputError):
        hypercube_bit_split(g, 4)


def test_invalid_params():
    for bad in [("nk_star", 4, 4), ("arrangement", 3, 0), ("hypercube", 0, None), ("torus", 3, 1)]:
        with pytest.raises(InvalidInputError):
            TopologySpec(*bad).build()
    with pytest.raises(InvalidInputError):
        TopologySpec("hypercube", 3, 2)


def test_distance_rule_values():
    assert arrangement_common_neighbor_count(5, 2, 1) == 2
    assert arrangement_common_neighbor_count(5, 2, 2) == 2
    assert arrangement_common_neighbor_count(4, 3, 2) == 1
    assert arrangement_common_neighbor_count(5, 2, 3) == 0


def _nx_violations(n, k):
    perms = list(itertools.permutations(range(1, n + 1), k))
    h = nx.Graph()
    h.add_edges_from((p, q) for p, q in itertools.combinations(perms, 2) if sum(a != b for a, b in zip(p, q)) == 1)
    dist = dict(nx.all_pairs_shortest_path_length(h))
    return sum(
        len(set(h[p]) & set(h[q])) != arrangement_common_neighbor_count(n, k, dist[p][q])
        for p, q in itertools.combinations(perms, 2)
    )


@pytest.mark.parametrize("n,k,count", [(4, 2, 24), (4, 3, 0), (5, 2, 60), (5, 3, 360)])
def test_distance_rule_violation_counts(n, k, count):
    # pairs at distance 2 where one symbol changes position have a single
    # common neighbour; counts agree with a networkx recount
    bad = check_lemma_common_neighbors(arrangement(n, k))
    assert len(bad) == count == _nx_violations(n, k)
    assert all(got == 1 and want == 2 for _, _, got, want in bad)


@pytest.mark.parametrize("n,k", [(4, 2), (4, 3), (5, 2), (5, 3), (6, 3)])
def test_exact_common_neighbour_rule(n, k):
    assert check_exact_common_neighbors(arrangement(n, k)) == []


def test_exact_rule_examples():
    assert exact_common_neighbor_count(4, (1, 2), (3, 4)) == 2
    assert exact_common_neighbor_count(4, (1, 2), (2, 3)) == 1
    assert exact_common_neighbor_count(4, (1, 2), (2, 1)) == 0
    with pytest.raises(InvalidInputError):
        exact_common_neighbor_count(4, (1, 2), (1, 2))
