import pytest
from hypothesis import given, strategies as st

from oddflip.errors import FormatError, GraphError
from oddflip.graph import (Graph, bipartition, connected_components, cycle_graph,
                           delete_vertices, parse_graph, path_graph, serialize_graph)


C5_TEXT = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n"


def test_parse_single_vertex():
    g = parse_graph("p edge 1 0")
    assert g.n == 1 and g.m == 0


def test_parse_c5_matches_builder():
    assert parse_graph(C5_TEXT) == cycle_graph(5)


def test_parse_accepts_bytes_and_comments():
    g = parse_graph(b"c a comment\np edge 3 2\nc another\ne 2 3\ne 1 2\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text, line, fragment", [
    ("p edge 2 1\ne 1 1\n", 2, "self-loop"),
    ("p edge 2 2\ne 1 2\ne 2 1\n", 3, "duplicate"),
    ("p edge 2 1\ne 1 3\n", 2, "out of range"),
    ("p graph 2 1\ne 1 2\n", 1, "bad header"),
    ("p edge 2 1\nx 1 2\n", 2, "expected"),
    ("p edge 2 one\n", 1, "integer"),
])
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(FormatError) as exc:
        parse_graph(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_parse_edge_count_mismatch():
    with pytest.raises(FormatError):
        parse_graph("p edge 3 2\ne 1 2\n")
    with pytest.raises(FormatError):
        parse_graph("p edge 3 1\ne 1 2\ne 2 3\n")


def test_serialize_small():
    assert serialize_graph(Graph(1, ())) == "p edge 1 0\n"
    assert serialize_graph(Graph(0, ())) == "p edge 0 0\n"


def test_serialize_sorts_edges():
    text = serialize_graph(cycle_graph(5))
    assert text == "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n"


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(graphs())
def test_round_trip(g):
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text


@given(graphs())
def test_adjacency_rebuilds_edges(g):
    rebuilt = {(u, v) for u in range(g.n) for v in g.adj[u] if u < v}
    assert rebuilt == set(g.edges)
    assert all(list(a) == sorted(a) for a in g.adj)


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 3),))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_delete_vertices_examples():
    c5 = cycle_graph(5)
    h, mapping = delete_vertices(c5, [0])
    assert h == path_graph(4)
    assert mapping == {1: 0, 2: 1, 3: 2, 4: 3}
    h, _ = delete_vertices(c5, [0, 1])
    assert h == path_graph(3)
    h, mapping = delete_vertices(Graph(1, ()), [0])
    assert h.n == 0 and mapping == {}


@given(graphs())
def test_delete_nothing_is_identity(g):
    h, mapping = delete_vertices(g, [])
    assert h == g and mapping == {i: i for i in range(g.n)}


def test_delete_unknown_vertex():
    with pytest.raises(GraphError):
        delete_vertices(cycle_graph(5), [7])


def test_bipartition():
    assert bipartition(cycle_graph(5)) is None
    colors = bipartition(path_graph(4))
    assert colors == (0, 1, 0, 1)


@given(graphs())
def test_bipartition_is_proper_when_present(g):
    colors = bipartition(g)
    if colors is not None:
        assert all(colors[u] != colors[v] for u, v in g.edges)


def test_components():
    g = Graph.from_edges(5, [(0, 1), (3, 4)])
    assert connected_components(g) == [[0, 1], [2], [3, 4]]
