import pytest
from hypothesis import given

from helpers import graph_with_matchings
from oddflip.errors import FormatError, IllegalFlip, MatchingError
from oddflip.graph import Graph, cycle_graph, path_graph
from oddflip.matching import (FlipSequence, OddMatching, apply_flip, charging_lower_bound,
                              decompose_union, legal_flips, lower_bound_mates,
                              parse_matching, parse_steps, serialize_matching,
                              serialize_steps, validate_sequence)


def test_odd_matching_validation():
    with pytest.raises(MatchingError):
        OddMatching((1, 0))
    with pytest.raises(MatchingError):
        OddMatching((-1, -1, -1))
    with pytest.raises(MatchingError):
        OddMatching((1, 2, -1))
    m = OddMatching((1, 0, -1))
    assert m.isolated == 2 and m.edges == ((0, 1),)


def test_from_edges_rejects_overlap():
    with pytest.raises(MatchingError):
        OddMatching.from_edges(5, [(0, 1), (1, 2)])


def test_flip_on_c5():
    g = cycle_graph(5)
    m = OddMatching.from_edges(5, [(1, 2), (3, 4)])
    assert legal_flips(g, m) == [1, 4]
    m2 = apply_flip(g, m, 1)
    assert m2.isolated == 2 and set(m2.edges) == {(0, 1), (3, 4)}
    with pytest.raises(IllegalFlip):
        apply_flip(g, m, 2)


@given(graph_with_matchings(count=1))
def test_flip_is_self_inverse(case):
    g, (m,) = case
    for w in legal_flips(g, m):
        m2 = apply_flip(g, m, w)
        assert m2.partner(w) == m.isolated
        assert apply_flip(g, m2, w) == m


def test_validate_sequence_reports_index():
    g = path_graph(5)
    m = OddMatching.from_edges(5, [(1, 2), (3, 4)])
    end, k = validate_sequence(g, FlipSequence(m, (1, 3)))
    assert k == 2 and end.isolated == 4
    with pytest.raises(IllegalFlip) as exc:
        validate_sequence(g, FlipSequence(m, (1, 0)))
    assert exc.value.index == 1


def test_decompose_union_example():
    # hexagon 1..6 with anchor 0 on vertex 1, the two rim matchings
    g = Graph.from_edges(7, [(0, 1)] + [(i, i % 6 + 1) for i in range(1, 7)])
    a = OddMatching.from_edges(7, [(1, 2), (3, 4), (5, 6)])
    b = OddMatching.from_edges(7, [(2, 3), (4, 5), (6, 1)])
    a.check(g)
    d = decompose_union(a, b)
    assert d.path == (0,)
    assert d.cycles == ((1, 2, 3, 4, 5, 6),)
    assert d.happy_edges == ()
    assert charging_lower_bound(d) == 4


def test_decompose_union_path():
    a = OddMatching.from_edges(5, [(1, 2), (3, 4)])
    b = OddMatching.from_edges(5, [(0, 1), (2, 3)])
    d = decompose_union(a, b)
    assert d.path == (0, 1, 2, 3, 4)
    assert d.path_edges == [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert charging_lower_bound(d) == 2


@given(graph_with_matchings(count=2, max_n=11))
def test_union_partitions_vertices(case):
    g, (a, b) = case
    d = decompose_union(a, b)
    covered = list(d.path) + [v for c in d.cycles for v in c]
    covered += [v for e in d.happy_edges for v in e]
    assert sorted(covered) == list(range(g.n))
    assert d.path[0] == a.isolated and d.path[-1] == b.isolated
    for c in d.cycles:
        assert len(c) % 2 == 0 and len(c) >= 4
    assert charging_lower_bound(d) == lower_bound_mates(a.mate, b.mate)


@given(graph_with_matchings(count=2))
def test_charging_bound_zero_iff_equal(case):
    _, (a, b) = case
    assert (charging_lower_bound(decompose_union(a, b)) == 0) == (a == b)


def test_matching_text_round_trip():
    m = OddMatching.from_edges(5, [(1, 2), (3, 4)])
    text = serialize_matching(m)
    assert text == "p matching 5\ni 1\nm 2 3\nm 4 5\n"
    assert parse_matching(text) == m
    assert parse_matching(text, path_graph(5)) == m


@pytest.mark.parametrize("text, line", [
    ("p matching 3\ni 1\ni 2\n", 3),
    ("p matching 3\ni 4\n", 2),
    ("p matching 3\ni 1\nm 2 2\n", 3),
    ("p matching 3\nq 1\n", 2),
    ("p match 3\n", 1),
])
def test_matching_parse_errors(text, line):
    with pytest.raises(FormatError) as exc:
        parse_matching(text)
    assert exc.value.line == line


def test_matching_parse_inconsistent_isolated():
    with pytest.raises(FormatError):
        parse_matching("p matching 3\ni 3\nm 2 3\n")


def test_matching_not_on_graph():
    with pytest.raises(MatchingError):
        parse_matching("p matching 5\ni 1\nm 2 4\nm 3 5\n", path_graph(5))


def test_steps_round_trip():
    assert parse_steps("distance 2\nf 2\nf 4\n") == [1, 3]
    assert serialize_steps([1, 3]) == "f 2\nf 4\n"
    with pytest.raises(FormatError):
        parse_steps("f 0\n")
    with pytest.raises(FormatError):
        parse_steps("f 1\ng 2\n")
