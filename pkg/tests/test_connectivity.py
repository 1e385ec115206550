import pytest
from hypothesis import given, settings

from helpers import SPLIT5, SPLIT7, graphs
from oddflip.connectivity import (EdgeClass, classify_edge, edge_report, has_odd_matching,
                                  has_perfect_matching, is_flip_connected, matching_number,
                                  maximum_matching)
from oddflip.errors import GraphError
from oddflip.graph import Graph, connected_components, cycle_graph, path_graph
from oddflip.oracles import brute_matching_number, brute_odd_matchings
from oddflip.verify import flip_connected_by_search


@settings(max_examples=150)
@given(graphs(max_n=10))
def test_matching_number_matches_brute_force(g):
    m = maximum_matching(g)
    used = [v for e in m for v in e]
    assert len(used) == len(set(used))
    assert all(g.has_edge(u, v) for u, v in m)
    assert len(m) == brute_matching_number(g) if g.n else len(m) == 0


def test_blossom_needed():
    # odd cycle with a stem: a greedy augmenting search without blossoms misses
    # the perfect matching of this 6-vertex graph
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5)])
    assert matching_number(g) == 3 and has_perfect_matching(g)
    assert matching_number(cycle_graph(7)) == 3
    assert has_odd_matching(cycle_graph(7))
    assert not has_odd_matching(Graph.from_edges(5, [(0, 1)]))


@settings(max_examples=150)
@given(graphs(min_n=1, max_n=9, odd=True))
def test_edge_classes_match_brute_force(g):
    odd = brute_odd_matchings(g)
    for e in g.edges:
        inside = sum(e in m for m in odd)
        want = (EdgeClass.FORBIDDEN if inside == 0 else
                EdgeClass.FORCED if inside == len(odd) else EdgeClass.FLEXIBLE)
        assert classify_edge(g, e) is want


@settings(max_examples=150)
@given(graphs(min_n=1, max_n=9, odd=True))
def test_connectivity_matches_component_count(g):
    ok, bad = is_flip_connected(g)
    assert ok == flip_connected_by_search(g)
    assert (bad is None) == ok
    if bad is not None:
        verdict = dict((v.edge, v) for v in edge_report(g))[bad]
        assert not verdict.ok


def test_split5():
    assert connected_components(SPLIT5)[-1] == [4]
    assert is_flip_connected(SPLIT5) == (False, (0, 2))
    assert not flip_connected_by_search(SPLIT5)


def test_split7_is_connected_host():
    assert len(connected_components(SPLIT7)) == 1
    assert is_flip_connected(SPLIT7) == (False, (0, 1))
    assert not flip_connected_by_search(SPLIT7)
    report = {v.edge: v for v in edge_report(SPLIT7)}
    assert report[(0, 1)].cls is EdgeClass.FLEXIBLE
    assert report[(0, 1)].perfect_without == (False, False)


def test_connected_examples():
    assert is_flip_connected(cycle_graph(5)) == (True, None)
    assert is_flip_connected(path_graph(5)) == (True, None)
    # no odd matchings at all counts as connected (empty flip graph)
    assert is_flip_connected(Graph.from_edges(5, [(0, 1)])) == (True, None)


def test_report_is_sorted_and_complete():
    g = path_graph(5)
    rep = edge_report(g)
    assert [v.edge for v in rep] == list(g.edges)
    assert all(v.ok for v in rep)


def test_errors():
    with pytest.raises(GraphError):
        is_flip_connected(path_graph(4))
    with pytest.raises(GraphError):
        classify_edge(path_graph(5), (0, 2))


def test_triangle_with_two_pendants():
    # triangle a, b, c with pendants d, e on a: the odd matchings are {ad, bc}, {ae, bc}
    a, b, c, d, e = range(5)
    g = Graph.from_edges(5, [(a, b), (a, c), (b, c), (a, d), (a, e)])
    classes = {v.edge: v.cls for v in edge_report(g)}
    assert classes == {(a, b): EdgeClass.FORBIDDEN, (a, c): EdgeClass.FORBIDDEN,
                       (a, d): EdgeClass.FLEXIBLE, (a, e): EdgeClass.FLEXIBLE,
                       (b, c): EdgeClass.FORCED}
    assert is_flip_connected(g) == (True, None)
