"""Maximum matchings in general graphs and the flip-graph connectivity test.

The flip graph of odd matchings of ``G`` (odd vertex count) is treated as
connected iff every edge ``e = (u1, u2)`` satisfies one of:

* every odd matching contains ``e`` (forced),
* no odd matching contains ``e`` (forbidden),
* ``G - u1`` or ``G - u2`` has a perfect matching.

All three conditions reduce to matching-number queries.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple, Optional

from .errors import GraphError
from .graph import Edge, Graph, canonical_edge, delete_vertices


def _augmenting_path(adj, match: list[int], root: int) -> Optional[list[int]]:
    """Search an augmenting path from the free vertex ``root``.

    Returns the BFS parent array with the free endpoint appended, or None.
    """
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = [root]
    head = 0

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while head < len(queue):
        v = queue[head]
        head += 1
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom onto its base
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return parent + [to]
                used[match[to]] = True
                queue.append(match[to])
    return None


def maximum_matching(g: Graph) -> list[Edge]:
    """Maximum-cardinality matching via Edmonds' blossom contraction.

    Free vertices are processed in index order and neighbors in ascending order,
    so the returned matching is deterministic. O(n^3).
    """
    adj = g.adj
    match = [-1] * g.n
    for root in range(g.n):
        if match[root] != -1 or not adj[root]:
            continue
        found = _augmenting_path(adj, match, root)
        if found is None:
            continue
        parent, v = found[:-1], found[-1]
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return [(u, p) for u, p in enumerate(match) if p > u]


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return 2 * matching_number(g) == g.n


def has_odd_matching(g: Graph) -> bool:
    return g.n % 2 == 1 and 2 * matching_number(g) == g.n - 1


class EdgeClass(Enum):
    FORCED = "forced"
    FORBIDDEN = "forbidden"
    FLEXIBLE = "flexible"


def _need_odd(g: Graph) -> None:
    if g.n % 2 == 0:
        raise GraphError(f"odd matchings need an odd vertex count, got {g.n}")


def classify_edge(g: Graph, e: Edge) -> EdgeClass:
    """Whether ``e`` lies in every, no, or some odd matchings of ``g``."""
    _need_odd(g)
    u1, u2 = canonical_edge(*e)
    if not g.has_edge(u1, u2):
        raise GraphError(f"edge {(u1, u2)} not in graph")
    rest, _ = delete_vertices(g, (u1, u2))
    if 2 * matching_number(rest) < g.n - 3:
        return EdgeClass.FORBIDDEN
    if 2 * matching_number(g.without_edge(u1, u2)) < g.n - 1:
        return EdgeClass.FORCED
    return EdgeClass.FLEXIBLE


class EdgeVerdict(NamedTuple):
    edge: Edge
    cls: EdgeClass
    perfect_without: tuple[bool, bool]   # G - u1, G - u2 have perfect matchings

    @property
    def ok(self) -> bool:
        return self.cls is not EdgeClass.FLEXIBLE or any(self.perfect_without)


class _VertexDeletionCache:
    def __init__(self, g: Graph):
        self.g = g
        self._pm: dict[int, bool] = {}

    def perfect_without(self, u: int) -> bool:
        if u not in self._pm:
            self._pm[u] = has_perfect_matching(delete_vertices(self.g, (u,))[0])
        return self._pm[u]


def edge_report(g: Graph) -> list[EdgeVerdict]:
    """Class and vertex-deletion test for every edge, in sorted edge order."""
    _need_odd(g)
    cache = _VertexDeletionCache(g)
    return [EdgeVerdict(e, classify_edge(g, e),
                        (cache.perfect_without(e[0]), cache.perfect_without(e[1])))
            for e in g.edges]


def is_flip_connected(g: Graph) -> tuple[bool, Optional[Edge]]:
    """Polynomial connectivity test; returns (verdict, first violating edge)."""
    _need_odd(g)
    cache = _VertexDeletionCache(g)
    for e in g.edges:
        if cache.perfect_without(e[0]) or cache.perfect_without(e[1]):
            continue
        if classify_edge(g, e) is EdgeClass.FLEXIBLE:
            return False, e
    return True, None
