"""Exact search over the flip graph of odd matchings.

Pairwise distances use bidirectional BFS on the implicit flip graph. Diameter,
radius and centers materialize the flip graph and run one BFS per state, either
bit-parallel in numpy (default) or through ``scipy.sparse.csgraph``; a
pure-Python BFS (``bfs_levels``) is kept alongside as the independent route
used by the tests.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .errors import (BudgetExceeded, DisconnectedFlipGraph, SearchCapExceeded,
                     SearchError)
from .graph import Graph
from .matching import FlipSequence, OddMatching, flip_mate, lower_bound_mates

DEFAULT_CAP = 50_000_000


def default_cap() -> int:
    """Expanded-state cap; ``ODDFLIP_CAP`` in the environment overrides the default."""
    return int(os.environ.get("ODDFLIP_CAP", DEFAULT_CAP))


# --- enumeration -------------------------------------------------------------

def _enumerate_mates(g: Graph, cap: Optional[int] = None) -> list[tuple[int, ...]]:
    n = g.n
    if n % 2 == 0:
        raise SearchError(f"no odd matchings exist on {n} vertices")
    cap = default_cap() if cap is None else cap
    adj = g.adj
    mate = [-2] * n          # -2 = undecided, -1 = isolated
    out: list[tuple[int, ...]] = []

    def rec(u: int, have_iso: bool):
        while u < n and mate[u] != -2:
            u += 1
        if u == n:
            out.append(tuple(mate))
            if len(out) > cap:
                raise SearchCapExceeded(cap)
            return
        for w in adj[u]:
            if w > u and mate[w] == -2:
                mate[u], mate[w] = w, u
                rec(u + 1, have_iso)
                mate[u] = mate[w] = -2
        if not have_iso:
            mate[u] = -1
            rec(u + 1, True)
            mate[u] = -2

    rec(0, False)
    return out


def enumerate_odd_matchings(g: Graph, cap: Optional[int] = None) -> list[OddMatching]:
    """Every odd matching of ``g`` once, in backtracking order over vertex indices.

    The lowest undecided vertex is matched to each larger free neighbor in turn and
    only then tried as the isolated vertex.
    """
    return [OddMatching(m) for m in _enumerate_mates(g, cap)]


# --- pairwise distance -------------------------------------------------------

@dataclass(frozen=True)
class DistanceReport:
    distance: Optional[int]              # None = unreachable
    witness: Optional[FlipSequence]
    nodes_expanded: int

    @property
    def reachable(self) -> bool:
        return self.distance is not None

    def to_text(self) -> str:
        if self.distance is None:
            return "distance unreachable\n"
        lines = [f"distance {self.distance}\n"]
        lines.extend(f"f {w + 1}\n" for w in self.witness.steps)
        return "".join(lines)


def _trace(parents: dict, state) -> list[int]:
    """Flip targets along the parent chain from ``state`` to the search root."""
    steps = []
    while parents[state] is not None:
        state, w = parents[state]
        steps.append(w)
    return steps


def flip_distance(g: Graph, m1: OddMatching, m2: OddMatching,
                  budget: Optional[int] = None,
                  cap: Optional[int] = None) -> DistanceReport:
    """Exact flip distance by bidirectional BFS over the implicit flip graph.

    The smaller frontier is expanded one full level at a time (the forward one on
    ties). With a ``budget``, states whose charging lower bound towards the
    opposite end exceeds the remaining budget are pruned, and BudgetExceeded is
    raised once the distance is known to be larger than the budget.
    """
    m1.check(g)
    m2.check(g)
    cap = default_cap() if cap is None else cap
    src, dst = m1.mate, m2.mate
    if src == dst:
        return DistanceReport(0, FlipSequence(m1, ()), 0)
    if budget is not None and budget < 0:
        raise BudgetExceeded(budget)
    adj = g.adj
    # Flips are self-inverse on the target vertex: flipping to w and then to w
    # again restores the matching, so both parent maps store (neighbor, w).
    visited = ({src: None}, {dst: None})
    fronts = ([src], [dst])
    depth = [0, 0]
    ends = (dst, src)
    expanded = 0
    while fronts[0] and fronts[1]:
        if budget is not None and depth[0] + depth[1] >= budget:
            raise BudgetExceeded(budget, expanded)
        side = 0 if len(fronts[0]) <= len(fronts[1]) else 1
        mine, other = visited[side], visited[1 - side]
        target = ends[side]
        slack = None if budget is None else budget - depth[side] - 1
        nxt_front = []
        for state in fronts[side]:
            expanded += 1
            if expanded > cap:
                raise SearchCapExceeded(cap)
            iso = state.index(-1)
            for w in adj[iso]:
                _, nxt = flip_mate(state, iso, w)
                if nxt in mine:
                    continue
                if slack is not None and lower_bound_mates(nxt, target) > slack:
                    continue
                mine[nxt] = (state, w)
                if nxt in other:
                    return _meet(m1, visited, nxt, expanded, budget)
                nxt_front.append(nxt)
        fronts = (nxt_front, fronts[1]) if side == 0 else (fronts[0], nxt_front)
        depth[side] += 1
    if budget is not None:
        # pruning may have emptied a frontier; the true distance is then > budget
        raise BudgetExceeded(budget, expanded)
    return DistanceReport(None, None, expanded)


def _meet(m1, visited, meet, expanded, budget) -> DistanceReport:
    fwd, bwd = visited
    head = _trace(fwd, meet)[::-1]
    tail = _trace(bwd, meet)
    d = len(head) + len(tail)
    if budget is not None and d > budget:
        raise BudgetExceeded(budget, expanded)
    return DistanceReport(d, FlipSequence(m1, tuple(head + tail)), expanded)


# --- single-source BFS -------------------------------------------------------

def bfs_levels(g: Graph, m: OddMatching, cap: Optional[int] = None) -> dict:
    """Distance from ``m`` to every reachable odd matching (keys are mate tuples)."""
    cap = default_cap() if cap is None else cap
    adj = g.adj
    dist = {m.mate: 0}
    queue = deque([m.mate])
    while queue:
        state = queue.popleft()
        if len(dist) > cap:
            raise SearchCapExceeded(cap)
        iso = state.index(-1)
        d = dist[state] + 1
        for w in adj[iso]:
            _, nxt = flip_mate(state, iso, w)
            if nxt not in dist:
                dist[nxt] = d
                queue.append(nxt)
    return dist


class Eccentricity(NamedTuple):
    value: int
    reached: int
    total: int

    @property
    def complete(self) -> bool:
        return self.reached == self.total


def eccentricity(g: Graph, m: OddMatching, cap: Optional[int] = None) -> Eccentricity:
    """Largest distance from ``m`` to a reachable matching, with reach counts.

    ``complete`` is False when part of the flip graph is unreachable from ``m``.
    """
    m.check(g)
    dist = bfs_levels(g, m, cap)
    total = len(_enumerate_mates(g, cap))
    return Eccentricity(max(dist.values()), len(dist), total)


# --- explicit flip graph -----------------------------------------------------

@dataclass(frozen=True)
class FlipGraph:
    states: tuple[OddMatching, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.states)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def index(self) -> dict:
        return {s.mate: i for i, s in enumerate(self.states)}

    def to_csr(self) -> csr_matrix:
        n = len(self.states)
        indptr = np.zeros(n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter((j for a in self.adjacency for j in a), dtype=np.int32,
                              count=int(indptr[-1]))
        data = np.ones(len(indices), dtype=np.int8)
        return csr_matrix((data, indices, indptr), shape=(n, n))

    def component_count(self) -> int:
        if not self.states:
            return 0
        return int(connected_components(self.to_csr(), directed=False)[0])


def build_flip_graph(g: Graph, cap: Optional[int] = None) -> FlipGraph:
    mates = _enumerate_mates(g, cap)
    index = {m: i for i, m in enumerate(mates)}
    adj = g.adj
    adjacency = []
    for m in mates:
        iso = m.index(-1)
        adjacency.append(tuple(sorted(index[flip_mate(m, iso, w)[1]] for w in adj[iso])))
    return FlipGraph(tuple(OddMatching(m) for m in mates), tuple(adjacency))


# --- all eccentricities ------------------------------------------------------

def _ecc_scipy(args) -> np.ndarray:
    csr, lo, hi = args
    d = shortest_path(csr, method="D", directed=False, unweighted=True,
                      indices=np.arange(lo, hi))
    return d.max(axis=1)


def _ecc_bitset(args) -> np.ndarray:
    """Eccentricities of sources ``lo..hi-1`` by bit-parallel BFS.

    Row ``w`` of ``reach`` is a bitset of the sources within the current level of
    ``w``; one level ORs every neighbor row into it. Unreached pairs leave the
    eccentricity at ``inf``.
    """
    csr, lo, hi = args
    n = csr.shape[0]
    indptr, indices = csr.indptr, csr.indices
    k = hi - lo
    cols = np.arange(k)
    word, bit = cols >> 6, (cols & 63).astype(np.uint64)
    reach = np.zeros((n, (k + 63) // 64), dtype=np.uint64)
    reach[lo + cols, word] |= np.left_shift(np.uint64(1), bit)
    deg = np.diff(indptr)
    slots = []
    for j in range(int(deg.max()) if n else 0):
        rows = np.flatnonzero(deg > j)
        slots.append((rows, indices[indptr[rows] + j]))
    ecc = np.zeros(k)
    level = 0
    while True:
        nxt = reach.copy()
        for rows, nbr in slots:
            nxt[rows] |= reach[nbr]
        grow = np.bitwise_or.reduce(nxt & ~reach, axis=0)
        if not grow.any():
            break
        level += 1
        ecc[((grow[word] >> bit) & np.uint64(1)).astype(bool)] = level
        reach = nxt
    full = np.bitwise_and.reduce(reach, axis=0)
    ecc[~((full[word] >> bit) & np.uint64(1)).astype(bool)] = np.inf
    return ecc


ECC_ROUTES = {"bitset": (_ecc_bitset, 4096), "scipy": (_ecc_scipy, None)}


def all_eccentricities(fg: FlipGraph, jobs: int = 1, route: str = "bitset") -> np.ndarray:
    """Eccentricity of every state (``inf`` if the flip graph is disconnected).

    One BFS per source, run either bit-parallel in numpy or through scipy.
    Sources are split into contiguous batches and results are concatenated in
    source order, so the output does not depend on ``jobs``.
    """
    if route not in ECC_ROUTES:
        raise ValueError(f"route must be one of {sorted(ECC_ROUTES)}, got {route!r}")
    n = len(fg)
    if n == 0:
        return np.zeros(0)
    fn, batch = ECC_ROUTES[route]
    if batch is None:
        batch = max(1, min(n, 4_000_000 // n))
    csr = fg.to_csr()
    tasks = [(csr, lo, min(n, lo + batch)) for lo in range(0, n, batch)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(fn, tasks))
    else:
        parts = [fn(t) for t in tasks]
    return np.concatenate(parts)


def _connected_flip_graph(g: Graph, cap) -> FlipGraph:
    fg = build_flip_graph(g, cap)
    if not fg.states:
        raise SearchError("the flip graph is empty")
    count, labels = connected_components(fg.to_csr(), directed=False)
    if count > 1:
        other = int(np.argmax(labels != labels[0]))
        raise DisconnectedFlipGraph(fg.states[0], fg.states[other])
    return fg


def diameter(g: Graph, jobs: int = 1, cap: Optional[int] = None) -> int:
    fg = _connected_flip_graph(g, cap)
    return int(all_eccentricities(fg, jobs).max())


def radius_center(g: Graph, jobs: int = 1,
                  cap: Optional[int] = None) -> tuple[int, list[OddMatching]]:
    """Radius of the flip graph and every state attaining it, in enumeration order."""
    fg = _connected_flip_graph(g, cap)
    ecc = all_eccentricities(fg, jobs)
    r = int(ecc.min())
    return r, [fg.states[i] for i in np.flatnonzero(ecc == r)]
