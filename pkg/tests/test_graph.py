import pytest
from hypothesis import given, strategies as st

from halohedra.graph import (
    GraphError,
    complete_graph,
    connected_graphs,
    cycle_graph,
    graph_from_json,
    is_connected_subset,
    path_graph,
    star_graph,
)


def test_path_edges():
    assert path_graph(1).edges == frozenset()
    assert path_graph(3).sorted_edges() == [(1, 2), (2, 3)]
    assert path_graph(5).sorted_edges() == [(1, 2), (2, 3), (3, 4), (4, 5)]


def test_cycle_edges():
    assert cycle_graph(3).sorted_edges() == [(1, 2), (1, 3), (2, 3)]
    assert cycle_graph(2).sorted_edges() == [(1, 2)]
    assert cycle_graph(4).sorted_edges() == [(1, 2), (1, 4), (2, 3), (3, 4)]


@pytest.mark.parametrize("make,n", [(path_graph, 0), (cycle_graph, 1), (cycle_graph, 0)])
def test_degenerate_sizes_rejected(make, n):
    with pytest.raises(GraphError):
        make(n)


def test_bad_graphs_rejected():
    with pytest.raises(GraphError, match="not connected"):
        graph_from_json({"nodes": 3, "edges": [[1, 2]]})
    with pytest.raises(GraphError, match="self-loop"):
        graph_from_json({"nodes": 2, "edges": [[1, 1], [1, 2]]})
    with pytest.raises(GraphError, match="duplicate"):
        graph_from_json({"nodes": 2, "edges": [[1, 2], [2, 1]]})
    with pytest.raises(GraphError, match="outside"):
        graph_from_json({"nodes": 2, "edges": [[1, 3]]})


def test_connected_subset_examples():
    assert not is_connected_subset(path_graph(3), [1, 3])
    assert is_connected_subset(cycle_graph(3), [1, 3])
    assert is_connected_subset(path_graph(5), [2, 3, 4])
    assert not is_connected_subset(path_graph(5), [])
    with pytest.raises(GraphError):
        is_connected_subset(path_graph(3), [4])


def test_graph_json_forms():
    assert graph_from_json({"family": "cycle", "n": 4}) == cycle_graph(4)
    g = graph_from_json({"nodes": 3, "edges": [[2, 1], [3, 2]]})
    assert g == path_graph(3)
    assert graph_from_json(g.to_json()) == g


def test_connected_graph_counts():
    # OEIS A001187: connected labeled graphs
    assert [len(connected_graphs(n)) for n in range(1, 5)] == [1, 1, 4, 38]


graphs = st.sampled_from(
    [f(n) for f in (path_graph, star_graph, complete_graph) for n in range(1, 7)]
    + [cycle_graph(n) for n in range(2, 7)]
)


@given(graphs, st.data())
def test_singletons_connected_and_growth_monotone(G, data):
    for v in G.nodes:
        assert is_connected_subset(G, [v])
    current = {data.draw(st.sampled_from(G.nodes))}
    while len(current) < G.node_count:
        frontier = sorted({w for v in current for w in G.neighbors(v)} - current)
        current.add(data.draw(st.sampled_from(frontier)))
        assert is_connected_subset(G, current)


@pytest.mark.parametrize("n", range(1, 8))
def test_families_connected(n):
    assert is_connected_subset(path_graph(n), range(1, n + 1))
    if n >= 2:
        assert is_connected_subset(cycle_graph(n), range(1, n + 1))
