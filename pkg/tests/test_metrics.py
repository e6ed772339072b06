import pytest

from helpers import complete, cycle, path, random_multigraph, star
from strongcolor import MultiGraph, compatible_order, find_shortest_cycle, girth
from strongcolor.metrics import (
    CycleDescriptor,
    DisconnectedGraphError,
    bfs_distances,
    edge_distance_class,
)


def test_bfs_on_pentagon():
    g = cycle(5)
    assert bfs_distances(g, 0) == [0, 1, 2, 2, 1]


def test_bfs_anchored_on_whole_cycle():
    g = cycle(5)
    c = find_shortest_cycle(g)
    assert bfs_distances(g, c) == [0] * 5


def test_bfs_on_star():
    g = star(4)
    assert bfs_distances(g, 0) == [0, 1, 1, 1, 1]


def test_bfs_tolerates_isolated_vertices():
    g = MultiGraph(3)
    g.add_edge(0, 1)
    g.freeze()
    assert bfs_distances(g, 0) == [0, 1, -1]


def test_bfs_rejects_unreachable_edges():
    g = MultiGraph(4)
    g.add_edge(0, 1)
    g.add_edge(2, 3)
    g.freeze()
    with pytest.raises(DisconnectedGraphError):
        bfs_distances(g, 0)


def test_edge_distance_class_is_min_of_endpoints():
    g = path(4)
    dist = bfs_distances(g, 0)
    assert edge_distance_class(g, dist, 0) == 0
    assert edge_distance_class(g, dist, 1) == 1
    assert edge_distance_class(g, dist, 2) == 2


def test_compatible_order_path():
    # v-a-b anchored at v: the far edge comes first
    g = path(3)
    assert compatible_order(g, 0) == [1, 0]


def test_compatible_order_cycle_anchor_in_k4():
    # every K4 edge touches the anchor triangle, so all six edges sit in
    # class 0 and the ascending-id tie-break decides the whole order
    g = complete(4)
    c = find_shortest_cycle(g)
    dist = bfs_distances(g, c)
    assert [edge_distance_class(g, dist, e) for e in range(6)] == [0] * 6
    assert compatible_order(g, c) == [0, 1, 2, 3, 4, 5]


def test_compatible_order_classes_nonincreasing():
    for seed in range(20):
        g = random_multigraph(seed, max_n=12)
        for v in range(g.vertex_count):
            if g.degree(v) == 0:
                continue
            try:
                dist = bfs_distances(g, v)
            except DisconnectedGraphError:
                continue
            order = compatible_order(g, v)
            classes = [edge_distance_class(g, dist, e) for e in order]
            assert classes == sorted(classes, reverse=True)
            assert sorted(order) == list(range(g.edge_count))
            break


def test_compatible_order_ties_break_by_edge_id():
    g = star(4)
    assert compatible_order(g, 0) == [0, 1, 2, 3]


def test_en_anchor_edges_come_last(en_graph):
    for v in range(en_graph.vertex_count):
        order = compatible_order(en_graph, v)
        at_v = set(en_graph.incident_edges(v))
        assert set(order[-len(at_v) :]) == at_v


def test_girth_conventions_loop_and_parallel():
    g = MultiGraph(2)
    g.add_edge(0, 1)
    g.add_edge(1, 1)
    g.freeze()
    c = find_shortest_cycle(g)
    assert girth(g) == 1
    assert tuple(c.vertices) == (1,) and tuple(c.edges) == (1,)

    h = MultiGraph(2)
    h.add_edge(0, 1)
    h.add_edge(0, 1)
    h.freeze()
    c = find_shortest_cycle(h)
    assert girth(h) == 2
    assert sorted(c.edges) == [0, 1]


def test_girth_examples():
    assert girth(path(5)) is None
    assert find_shortest_cycle(path(5)) is None
    assert girth(complete(5)) == 3
    assert girth(cycle(7)) == 7


def test_en_graph_girth_is_4(en_graph):
    assert girth(en_graph) == 4


def test_fixture_girths(petersen, robertson, cage46):
    assert girth(petersen) == 5
    assert girth(robertson) == 5
    assert girth(cage46) == 6


def _cycle_is_valid(g: MultiGraph, c: CycleDescriptor) -> bool:
    k = len(c)
    if len(c.vertices) != k or len(set(c.vertices)) != k:
        return False
    for i, e in enumerate(c.edges):
        u = c.vertices[i]
        v = c.vertices[(i + 1) % k]
        if tuple(sorted(g.endpoints(e))) != tuple(sorted((u, v))):
            return False
    return len(set(c.edges)) == k


def test_shortest_cycle_witness_validates():
    for seed in range(40):
        g = random_multigraph(seed, max_n=10)
        c = find_shortest_cycle(g)
        if c is None:
            continue
        assert len(c) == girth(g)
        assert _cycle_is_valid(g, c)


def test_girth_matches_networkx_on_simple_graphs():
    nx = pytest.importorskip("networkx")
    for seed in range(40):
        g = random_multigraph(seed, max_n=10)
        if g.find_loop() is not None or g.find_parallel_pair() is not None:
            continue
        h = nx.Graph()
        h.add_nodes_from(range(g.vertex_count))
        h.add_edges_from(g.edges)
        want = nx.girth(h)
        got = girth(g)
        if want == float("inf"):
            assert got is None
        else:
            assert got == want
