import json

import pytest

from propcolor import (
    Graph,
    InputError,
    build_family,
    components,
    disjoint_union,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    induced_subgraph,
)


def test_build_triangle():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.max_degree == 2
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.is_complete()


def test_build_edgeless():
    g = Graph(2, [])
    assert g.max_degree == 0
    assert g.adj == (frozenset(), frozenset())


@pytest.mark.parametrize("n,edges", [
    (4, [(0, 0)]),            # loop
    (3, [(0, 3)]),            # out of range
    (3, [(0, 1), (1, 0)]),    # duplicate, reversed
    (3, [(0, 1), (0, 1)]),    # duplicate
    (-1, []),                 # bad count
])
def test_build_rejects_bad_input(n, edges):
    with pytest.raises(InputError):
        Graph(n, edges)


def test_star_family():
    g = build_family("star", [4])
    assert g.n == 5
    assert g.edges == ((0, 1), (0, 2), (0, 3), (0, 4))


def test_doubled_multipartite_is_four_cycle():
    g = build_family("doubled_multipartite", [2])
    # parts {0,1} and {2,3}: the cross edges form a 4-cycle
    assert g.n == 4
    assert g.edges == ((0, 2), (0, 3), (1, 2), (1, 3))


def test_star_forest_two_blocks():
    g = build_family("star_forest", [2])
    assert g.n == 6
    assert len(g.edges) == 4
    assert [len(c) for c in components(g)] == [3, 3]


@pytest.mark.parametrize("name,param,nv,ne", [
    ("complete", 5, 5, 10),
    ("complete", 1, 1, 0),
    ("star", 6, 7, 6),
    ("path", 4, 4, 3),
    ("cycle", 5, 5, 5),
    ("balanced_bipartite", 3, 6, 9),
    ("doubled_multipartite", 3, 6, 12),
    ("star_forest", 3, 12, 9),
])
def test_family_closed_forms(name, param, nv, ne):
    g = build_family(name, [param])
    assert g.n == nv
    assert len(g.edges) == ne


def test_clique_union_sizes():
    g = build_family("clique_union", [3, 2, 1])
    assert g.n == 6
    assert len(g.edges) == 4
    assert [len(c) for c in components(g)] == [3, 2, 1]


@pytest.mark.parametrize("name,params", [
    ("cycle", [2]),
    ("star", [0]),
    ("complete", [2, 3]),
    ("clique_union", []),
    ("nonsense", [1]),
])
def test_family_rejects_bad_params(name, params):
    with pytest.raises(InputError):
        build_family(name, params)


def test_disjoint_union():
    k2, k1 = build_family("complete", [2]), build_family("complete", [1])
    g = disjoint_union([k2, k1])
    assert (g.n, len(g.edges)) == (3, 1)
    assert disjoint_union([]) == Graph(0)
    k3 = build_family("complete", [3])
    g = disjoint_union([k3, k2, k1])
    assert (g.n, len(g.edges)) == (6, 4)
    assert len(components(g)) == 3


def test_induced_subgraph():
    k3 = build_family("complete", [3])
    sub, index = induced_subgraph(k3, {0, 1})
    assert sub == Graph(2, [(0, 1)])
    assert index == {0: 0, 1: 1}
    star = build_family("star", [4])
    leaves, _ = induced_subgraph(star, {1, 2, 3, 4})
    assert leaves == Graph(4, [])
    c4 = build_family("cycle", [4])
    p3, _ = induced_subgraph(c4, {0, 1, 2})
    assert p3 == Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(InputError):
        induced_subgraph(k3, {0, 5})


def test_induced_subgraph_identity():
    g = build_family("cycle", [5])
    sub, index = induced_subgraph(g, range(5))
    assert sub == g
    assert index == {v: v for v in range(5)}


def test_components():
    g = build_family("star_forest", [2])
    assert components(g) == [[0, 1, 2], [3, 4, 5]]
    assert components(build_family("complete", [3])) == [[0, 1, 2]]
    assert components(Graph(0)) == []


def test_components_partition_and_edges_internal():
    g = disjoint_union([build_family("cycle", [4]), build_family("path", [3])])
    comps = components(g)
    assert sorted(v for comp in comps for v in comp) == list(range(g.n))
    where = {v: i for i, comp in enumerate(comps) for v in comp}
    assert all(where[u] == where[v] for u, v in g.edges)


def test_json_round_trip():
    g = build_family("doubled_multipartite", [2])
    doc = graph_to_json(g)
    assert doc == {"n": 4, "edges": [[0, 2], [0, 3], [1, 2], [1, 3]]}
    assert graph_from_json(json.loads(json.dumps(doc))) == g
    with pytest.raises(InputError):
        graph_from_json({"edges": []})


def test_dot_export():
    g = Graph(3, [(0, 1)])
    dot = graph_to_dot(g)
    assert dot.startswith("graph G {")
    assert "0 -- 1;" in dot
    assert "2;" in dot  # isolated vertices listed
