"""Set cover to flip distance between two fixed odd matchings.

Layout: shared vertex ``u``; per set a path ``setpath.i.1 .. setpath.i.V`` whose
first vertex touches ``u`` and whose last vertex touches the port of every
element it contains; per element a 4-cycle ``element.e.1 .. element.e.4`` with
port at position 1. Both matchings isolate ``u`` and agree on the paths; they
differ exactly on the element cycles.

A cover of size ``c`` is realized in ``c * V + 3n`` flips: walk the isolated
vertex down each chosen path (``V/2`` flips), switch the reachable element
cycles (3 flips each), and walk back (``V/2`` flips).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import ReductionError
from ..graph import Graph, bipartition
from ..matching import FlipSequence, OddMatching, validate_sequence
from .formula import SetCoverInstance
from .gadgets import CLAUSE4, CLAUSE_IN, CLAUSE_TAR, Builder, path_pairs, place
from .params import ReductionParams


def default_path_len(n: int) -> int:
    return 6 * n + 2


@dataclass(frozen=True)
class SetCoverReduction:
    instance: SetCoverInstance
    graph: Graph
    m_in: OddMatching
    m_tar: OddMatching
    path_len: int
    u: int
    roles: tuple[str, ...]
    set_paths: tuple[tuple[int, ...], ...]      # per set, path vertices near to far
    element_cycles: tuple[tuple[int, ...], ...]  # per element, positions 1..4

    @property
    def n(self) -> int:
        return self.instance.n

    @property
    def t(self) -> int:
        return self.instance.t

    def distance_for(self, cover_size: int) -> int:
        return cover_size * self.path_len + 3 * self.n


def build_setcover_instance(sc: SetCoverInstance,
                            params: ReductionParams = ReductionParams()) -> SetCoverReduction:
    V = params.path_len_override or default_path_len(sc.n)
    b = Builder()
    u = b.vertex("u")
    paths = [b.path(f"setpath.{i}", V, u) for i in range(1, sc.t + 1)]
    cycles = []
    for e in range(1, sc.n + 1):
        labels = b.gadget(CLAUSE4, f"element.{e}")
        cycles.append(tuple(labels[k] for k in range(1, 5)))
    for path, s in zip(paths, sc.sets):
        for e in sorted(s):
            b.edge(path[-1], cycles[e - 1][0])
    g = b.graph()
    if g.n != 1 + sc.t * V + 4 * sc.n or g.n % 2 == 0:
        raise ReductionError("internal: unexpected vertex count")
    common = [pair for path in paths for pair in path_pairs(path, 0)]
    m_in, m_tar = list(common), list(common)
    for e in range(1, sc.n + 1):
        labels = b.gadgets[f"element.{e}"]
        m_in += place(labels, CLAUSE_IN)
        m_tar += place(labels, CLAUSE_TAR)
    a = OddMatching.from_edges(g.n, m_in).check(g)
    z = OddMatching.from_edges(g.n, m_tar).check(g)
    _check_coloring(g, u, paths, cycles)
    return SetCoverReduction(sc, g, a, z, V, u, tuple(b.roles),
                             tuple(tuple(p) for p in paths), tuple(cycles))


def _check_coloring(g: Graph, u: int, paths, cycles) -> None:
    """Bipartite with ``u``, even path positions and cycle positions 2, 4 on one side."""
    color = bipartition(g)
    if color is None:
        raise ReductionError("set-cover graph is not bipartite")
    side = color[u]
    for path in paths:
        for pos, x in enumerate(path, start=1):
            if (color[x] == side) != (pos % 2 == 0):
                raise ReductionError("path coloring breaks the parity pattern")
    for cyc in cycles:
        if color[cyc[1]] != side or color[cyc[3]] != side or color[cyc[0]] == side:
            raise ReductionError("element cycle coloring breaks the parity pattern")


def canonical_sequence(red: SetCoverReduction, cover) -> FlipSequence:
    """Flip sequence of length ``|cover| * V + 3n`` for a cover (1-based set indices).

    Each element is switched from the first chosen set that contains it.
    """
    chosen = sorted(set(cover))
    done: set = set()
    steps: list[int] = []
    for i in chosen:
        if not 1 <= i <= red.t:
            raise ReductionError(f"set index {i} out of range")
        path = red.set_paths[i - 1]
        # walking down: iso at u, flip to p1 isolates p2, flip to p3 isolates p4, ...
        steps.extend(path[k] for k in range(0, red.path_len, 2))
        for e in sorted(red.instance.sets[i - 1] - done):
            q, b_, c_, d_ = red.element_cycles[e - 1]
            # iso at far end pV: flip to q (isolates b), to c (isolates d), to q (isolates pV)
            steps.extend((q, c_, q))
            done.add(e)
        # walking back: iso at pV, flip to p(V-1) isolates p(V-2), ..., flip to p1 isolates u
        steps.extend(path[k] for k in range(red.path_len - 2, -1, -2))
    if done != set(range(1, red.n + 1)):
        raise ReductionError("the given sets do not form a cover")
    seq = FlipSequence(red.m_in, tuple(steps))
    final, length = validate_sequence(red.graph, seq)
    if final != red.m_tar or length != red.distance_for(len(chosen)):
        raise ReductionError("internal: canonical sequence does not reach the target")
    return seq


def recover_cover(red: SetCoverReduction, seq: FlipSequence) -> tuple[frozenset, int]:
    """Sets whose far path end ever held the isolated vertex, and the size bound
    ``(len(seq) - 3n) // V``."""
    if seq.start != red.m_in:
        raise ReductionError("sequence does not start at the reduction's start matching")
    states = seq.matchings(red.graph)
    if states[-1] != red.m_tar:
        raise ReductionError("sequence does not end at the target matching")
    far = {path[-1]: i for i, path in enumerate(red.set_paths, start=1)}
    cover = frozenset(far[m.isolated] for m in states if m.isolated in far)
    bound = (len(seq.steps) - 3 * red.n) // red.path_len
    return cover, bound


def cover_is_valid(sc: SetCoverInstance, cover) -> bool:
    got: set = set()
    for i in cover:
        got |= sc.sets[i - 1]
    return got == set(range(1, sc.n + 1))


def from_parts(graph: Graph, roles, m_in: OddMatching, m_tar: OddMatching,
               instance: Optional[SetCoverInstance] = None) -> SetCoverReduction:
    """Rebuild the reduction bookkeeping from its graph and role tags.

    The set system is read off the graph when ``instance`` is not given.
    """
    paths: dict[int, dict[int, int]] = {}
    cycles: dict[int, dict[int, int]] = {}
    u = None
    for x, tag in enumerate(roles):
        parts = tag.split(".")
        if parts[0] == "u":
            u = x
        elif parts[0] == "setpath":
            paths.setdefault(int(parts[1]), {})[int(parts[2])] = x
        elif parts[0] == "element":
            cycles.setdefault(int(parts[1]), {})[int(parts[2])] = x
        else:
            raise ReductionError(f"unexpected role {tag!r} in a set-cover reduction")
    if u is None or not paths or not cycles:
        raise ReductionError("roles do not describe a set-cover reduction")
    set_paths = tuple(tuple(p[k] for k in sorted(p)) for _, p in sorted(paths.items()))
    elem = tuple(tuple(c[k] for k in range(1, 5)) for _, c in sorted(cycles.items()))
    port_of = {c[0]: e for e, c in enumerate(elem, start=1)}
    if instance is None:
        sets = [frozenset(port_of[y] for y in graph.adj[p[-1]] if y in port_of)
                for p in set_paths]
        instance = SetCoverInstance(len(elem), tuple(sets))
    V = len(set_paths[0])
    return SetCoverReduction(instance, graph, m_in, m_tar, V, u, tuple(roles),
                             set_paths, elem)
