"""Undirected simple graphs and their text format.

Vertices are ``0 .. n-1`` in Python and ``1 .. n`` in files. The file format is::

    c optional comment
    p edge <n> <m>
    e <u> <v>        (exactly m lines)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import FormatError, GraphError

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    ``edges`` is stored sorted with every pair as ``(min, max)``; ``adj[u]`` is
    the ascending neighbor tuple of ``u``.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _edge_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = canonical_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        edges = tuple(sorted(seen))
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "_edge_set", frozenset(edges))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._edge_set

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def without_edge(self, u: int, v: int) -> "Graph":
        e = canonical_edge(u, v)
        if e not in self._edge_set:
            raise GraphError(f"edge {e} not in graph")
        return Graph(self.n, tuple(x for x in self.edges if x != e))


def delete_vertices(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the vertices not in ``vs``.

    Returns the subgraph and the map from surviving old indices to new ones;
    surviving vertices keep their relative order.
    """
    drop = set(vs)
    for x in drop:
        if not 0 <= x < g.n:
            raise GraphError(f"unknown vertex {x}")
    mapping: dict[int, int] = {}
    for x in range(g.n):
        if x not in drop:
            mapping[x] = len(mapping)
    edges = [(mapping[u], mapping[v]) for u, v in g.edges
             if u in mapping and v in mapping]
    return Graph(len(mapping), tuple(edges)), mapping


def bipartition(g: Graph) -> Optional[tuple[int, ...]]:
    """2-coloring of ``g`` or None if some component has an odd cycle.

    The lowest-index vertex of each component gets color 0.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return tuple(color)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        return data.decode("ascii")
    return data


def _meaningful_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        yield lineno, toks


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(data) -> Graph:
    """Parse the graph file format (str or bytes)."""
    lines = list(_meaningful_lines(_text(data)))
    if not lines:
        raise FormatError("missing 'p edge' header", 1)
    lineno, head = lines[0]
    if len(head) != 4 or head[0] != "p" or head[1] != "edge":
        raise FormatError("bad header, expected 'p edge <n> <m>'", lineno)
    n, m = _int(head[2], lineno), _int(head[3], lineno)
    if n < 0 or m < 0:
        raise FormatError("bad header, negative count", lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise FormatError(f"header announces {m} edges, found {len(body)}", where)
    seen = set()
    edges = []
    for lineno, toks in body:
        if len(toks) != 3 or toks[0] != "e":
            raise FormatError("expected 'e <u> <v>'", lineno)
        u, v = _int(toks[1], lineno), _int(toks[2], lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"vertex index out of range 1..{n}", lineno)
        e = canonical_edge(u - 1, v - 1)
        if e in seen:
            raise FormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(e)
        edges.append(e)
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}\n"]
    out.extend(f"e {u + 1} {v + 1}\n" for u, v in g.edges)
    return "".join(out)


# A handful of named graphs used in tests, demos and fixtures.

def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))
