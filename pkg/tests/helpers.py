"""Shared hypothesis strategies and small fixtures for the test modules."""

from hypothesis import strategies as st

from oddflip.graph import Graph
from oddflip.search import enumerate_odd_matchings


@st.composite
def graphs(draw, min_n=0, max_n=9, odd=False):
    n = draw(st.integers(min_n, max_n))
    if odd and n % 2 == 0:
        n += 1 if n < max_n else -1
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def graph_with_matchings(draw, count=2, max_n=9):
    """An odd-order graph and ``count`` of its odd matchings (repeats allowed)."""
    g = draw(graphs(min_n=1, max_n=max_n, odd=True).filter(
        lambda h: len(enumerate_odd_matchings(h, cap=5000)) >= 1))
    states = enumerate_odd_matchings(g)
    picks = [draw(st.sampled_from(states)) for _ in range(count)]
    return g, picks


# Mined examples of disconnected flip graphs (0-based edges).
# A 4-cycle plus an isolated vertex: two odd matchings and no legal flip.
SPLIT5 = Graph.from_edges(5, [(0, 2), (0, 3), (1, 2), (1, 3)])
# Smallest connected host graph found with a disconnected flip graph.
SPLIT7 = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 6), (2, 3), (4, 6), (5, 6)])
