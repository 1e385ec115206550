"""Odd matchings, flips, and the union decomposition of two odd matchings.

An odd matching is stored as its ``mate`` tuple: ``mate[u]`` is the partner of
``u`` and ``-1`` marks the single isolated vertex. This tuple is canonical, so
it doubles as the hash key for search states.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import FormatError, IllegalFlip, MatchingError
from .graph import Edge, Graph, _int, _meaningful_lines, _text, canonical_edge


@dataclass(frozen=True)
class OddMatching:
    mate: tuple[int, ...]
    isolated: int = field(init=False, compare=False)

    def __post_init__(self):
        n = len(self.mate)
        if n % 2 == 0:
            raise MatchingError(f"odd matchings need an odd vertex count, got {n}")
        iso = [u for u, p in enumerate(self.mate) if p == -1]
        if len(iso) != 1:
            raise MatchingError(f"expected exactly one isolated vertex, found {len(iso)}")
        for u, p in enumerate(self.mate):
            if p != -1 and not (0 <= p < n and p != u and self.mate[p] == u):
                raise MatchingError(f"inconsistent partner for vertex {u}")
        object.__setattr__(self, "isolated", iso[0])

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "OddMatching":
        mate = [-1] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise MatchingError(f"bad matching edge ({u}, {v})")
            if mate[u] != -1 or mate[v] != -1:
                raise MatchingError(f"edges share a vertex at ({u}, {v})")
            mate[u], mate[v] = v, u
        return cls(tuple(mate))

    @property
    def n(self) -> int:
        return len(self.mate)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, p) for u, p in enumerate(self.mate) if p > u)

    def partner(self, u: int) -> Optional[int]:
        p = self.mate[u]
        return None if p == -1 else p

    def check(self, g: Graph) -> "OddMatching":
        """Raise unless this matching lives on ``g``; returns self for chaining."""
        if g.n != self.n:
            raise MatchingError(f"matching has {self.n} vertices, graph has {g.n}")
        for u, v in self.edges:
            if not g.has_edge(u, v):
                raise MatchingError(f"matching edge ({u}, {v}) is not a graph edge")
        return self

    def __repr__(self):
        return f"OddMatching(isolated={self.isolated}, edges={list(self.edges)})"


def flip_mate(mate: tuple[int, ...], iso: int, w: int) -> tuple[int, tuple[int, ...]]:
    """Raw flip on a mate tuple; returns (new isolated vertex, new mate)."""
    p = mate[w]
    new = list(mate)
    new[iso] = w
    new[w] = iso
    new[p] = -1
    return p, tuple(new)


def apply_flip(g: Graph, m: OddMatching, w: int) -> OddMatching:
    """Match the isolated vertex to ``w``; ``w``'s old partner becomes isolated."""
    iso = m.isolated
    if w == iso or not (0 <= w < g.n) or not g.has_edge(iso, w):
        raise IllegalFlip(f"vertex {w} is not adjacent to the isolated vertex {iso}")
    return OddMatching(flip_mate(m.mate, iso, w)[1])


def legal_flips(g: Graph, m: OddMatching) -> list[int]:
    return list(g.adj[m.isolated])


@dataclass(frozen=True)
class FlipSequence:
    start: OddMatching
    steps: tuple[int, ...] = ()

    def __len__(self):
        return len(self.steps)

    def matchings(self, g: Graph) -> list[OddMatching]:
        """All intermediate matchings, ``start`` first."""
        out = [self.start]
        for i, w in enumerate(self.steps):
            try:
                out.append(apply_flip(g, out[-1], w))
            except IllegalFlip as exc:
                raise IllegalFlip(f"step {i}: {exc}", index=i) from None
        return out


def validate_sequence(g: Graph, s: FlipSequence) -> tuple[OddMatching, int]:
    """Replay ``s`` on ``g``.

    Returns the final matching and the number of flips. An illegal step raises
    IllegalFlip whose ``index`` is the 0-based position of that step.
    """
    s.start.check(g)
    return s.matchings(g)[-1], len(s.steps)


@dataclass(frozen=True)
class UnionDecomposition:
    """Components of ``M1 ∪ M2`` for two odd matchings on the same vertices.

    ``path`` runs from the isolated vertex of M1 to that of M2 and starts with an
    M2 edge. Each cycle starts at its smallest vertex, then its smaller neighbor.
    """

    path: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    happy_edges: tuple[Edge, ...]

    @property
    def path_edges(self) -> list[Edge]:
        return [canonical_edge(a, b) for a, b in zip(self.path, self.path[1:])]

    def cycle_edges(self, i: int) -> list[Edge]:
        c = self.cycles[i]
        return [canonical_edge(c[j], c[(j + 1) % len(c)]) for j in range(len(c))]


def decompose_union(m1: OddMatching, m2: OddMatching) -> UnionDecomposition:
    if m1.n != m2.n:
        raise MatchingError(f"matchings have {m1.n} and {m2.n} vertices")
    a, b = m1.mate, m2.mate
    n = m1.n
    used = [False] * n

    path = [m1.isolated]
    used[m1.isolated] = True
    cur, take_m2 = m1.isolated, True
    while True:
        nxt = b[cur] if take_m2 else a[cur]
        if nxt == -1:
            break
        path.append(nxt)
        used[nxt] = True
        cur, take_m2 = nxt, not take_m2

    happy = []
    cycles = []
    for s in range(n):
        if used[s]:
            continue
        if a[s] == b[s]:
            if s < a[s]:
                happy.append((s, a[s]))
            continue
        # first step goes to the smaller of the two cycle neighbors
        first_m1 = a[s] < b[s]
        cyc = [s]
        used[s] = True
        cur, use_m1 = s, first_m1
        while True:
            nxt = a[cur] if use_m1 else b[cur]
            if nxt == s:
                break
            cyc.append(nxt)
            used[nxt] = True
            cur, use_m1 = nxt, not use_m1
        cycles.append(tuple(cyc))
    return UnionDecomposition(tuple(path), tuple(cycles), tuple(happy))


def charging_lower_bound(d: UnionDecomposition) -> int:
    """Flips that any sequence between the two matchings must spend.

    ``k`` flips for a path holding ``k`` edges of each matching, ``k + 1`` for an
    alternating cycle with ``k`` edges of each, nothing for happy edges.
    """
    bound = (len(d.path) - 1) // 2
    for c in d.cycles:
        bound += len(c) // 2 + 1
    return bound


def parse_matching(data, g: Optional[Graph] = None) -> OddMatching:
    """Parse ``p matching <n>`` / ``i <v>`` / ``m <u> <v>`` lines."""
    lines = list(_meaningful_lines(_text(data)))
    if not lines:
        raise FormatError("missing 'p matching' header", 1)
    lineno, head = lines[0]
    if len(head) != 3 or head[:2] != ["p", "matching"]:
        raise FormatError("bad header, expected 'p matching <n>'", lineno)
    n = _int(head[2], lineno)
    iso = None
    edges = []
    for lineno, toks in lines[1:]:
        if toks[0] == "i" and len(toks) == 2:
            if iso is not None:
                raise FormatError("second 'i' line", lineno)
            iso = _int(toks[1], lineno)
            if not 1 <= iso <= n:
                raise FormatError("isolated vertex out of range", lineno)
        elif toks[0] == "m" and len(toks) == 3:
            u, v = _int(toks[1], lineno), _int(toks[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise FormatError("bad matching edge", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise FormatError("expected 'i <v>' or 'm <u> <v>'", lineno)
    if iso is None:
        raise FormatError("missing 'i <v>' line", lineno)
    try:
        m = OddMatching.from_edges(n, edges)
    except MatchingError as exc:
        raise FormatError(str(exc)) from None
    if m.isolated != iso - 1:
        raise FormatError(f"'i {iso}' disagrees with the edges (isolated vertex is "
                          f"{m.isolated + 1})")
    if g is not None:
        m.check(g)
    return m


def serialize_matching(m: OddMatching) -> str:
    out = [f"p matching {m.n}\n", f"i {m.isolated + 1}\n"]
    out.extend(f"m {u + 1} {v + 1}\n" for u, v in m.edges)
    return "".join(out)


def parse_steps(data) -> list[int]:
    """Flip targets from ``f <w>`` lines (1-based in text, 0-based returned).

    A leading ``distance <k>`` line, as written by distance reports, is skipped.
    """
    steps = []
    for lineno, toks in _meaningful_lines(_text(data)):
        if toks[0] == "distance" and not steps:
            continue
        if toks[0] != "f" or len(toks) != 2:
            raise FormatError("expected 'f <w>'", lineno)
        w = _int(toks[1], lineno)
        if w < 1:
            raise FormatError("vertex index out of range", lineno)
        steps.append(w - 1)
    return steps


def serialize_steps(steps: Sequence[int]) -> str:
    return "".join(f"f {w + 1}\n" for w in steps)


def lower_bound_mates(a: Sequence[int], b: Sequence[int]) -> int:
    """``charging_lower_bound`` computed straight from two mate tuples.

    Equals (edges of ``b`` missing from ``a``) + (number of alternating cycles).
    """
    missing = 0
    for u, p in enumerate(b):
        if p > u and a[u] != p:
            missing += 1
    n = len(a)
    seen = bytearray(n)
    cur = a.index(-1)
    # walk the path so its vertices are not mistaken for cycle vertices
    seen[cur] = 1
    take_b = True
    while True:
        nxt = b[cur] if take_b else a[cur]
        if nxt == -1:
            break
        seen[nxt] = 1
        cur, take_b = nxt, not take_b
    cycles = 0
    for s in range(n):
        if seen[s] or a[s] == b[s]:
            continue
        cycles += 1
        cur, use_a = s, True
        while True:
            seen[cur] = 1
            cur = a[cur] if use_a else b[cur]
            use_a = not use_a
            if cur == s:
                break
    return missing + cycles
