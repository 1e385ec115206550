"""Gadget shapes, their perfect matchings, and a small role-tagging graph builder.

Gadget vertices are addressed by 1-based labels along the rim cycle. Matchings
of a gadget are given as tuples of label pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ReductionError
from ..graph import Graph, canonical_edge
from ..matching import OddMatching, decompose_union

LabelPairs = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GadgetShape:
    kind: str
    size: int
    diagonals: tuple[tuple[int, int], ...]
    entry: tuple[int, ...]          # labels adjacent to the central vertex
    positive: tuple[int, ...]       # labels wired to clauses with the positive literal
    negative: tuple[int, ...]

    def edges(self) -> list[tuple[int, int]]:
        rim = [(i, i % self.size + 1) for i in range(1, self.size + 1)]
        return rim + list(self.diagonals)

    def ports(self, positive: bool) -> tuple[int, ...]:
        return self.positive if positive else self.negative


# Universal variable of the diameter construction; also the first existential
# block of the radius construction.
CROSSED12 = GadgetShape("crossed12", 12, ((2, 10), (3, 11)), (1,), (4, 10), (3, 9))
# Existential gadget entered through either of two adjacent rim vertices.
EXISTS12 = GadgetShape("exists12", 12, (), (1, 12), (2, 10), (3, 11))
# Universal variable of the radius construction.
CROSSED14 = GadgetShape("crossed14", 14, ((2, 12), (3, 11), (4, 12), (3, 13)), (1,),
                        (4, 10), (5, 11))
CLAUSE4 = GadgetShape("clause4", 4, (), (), (1,), (1,))


def rim_a(size: int) -> LabelPairs:
    """Rim perfect matching holding (1, 2)."""
    return tuple((i, i + 1) for i in range(1, size, 2))


def rim_b(size: int) -> LabelPairs:
    """Rim perfect matching holding (size, 1)."""
    return tuple((i, i + 1) for i in range(2, size, 2)) + ((size, 1),)


# Perfect matching of CROSSED12 using both diagonals. With rim_a it forms the
# crossed 12-cycle; with rim_b it leaves the 4-cycle 2-3-11-10 plus four happy edges.
CROSSED12_DIAG: LabelPairs = ((2, 10), (3, 11), (12, 1), (4, 5), (6, 7), (8, 9))

# The two non-rim perfect matchings of CROSSED14. rim_a + Y and X + rim_b are
# single 14-cycles with one crossing; X + Y uses all four diagonals (two
# crossings); rim_a + rim_b is the uncrossed rim.
CROSSED14_X: LabelPairs = ((1, 2), (3, 11), (4, 12), (5, 6), (7, 8), (9, 10), (13, 14))
CROSSED14_Y: LabelPairs = ((1, 14), (2, 12), (3, 13), (4, 5), (6, 7), (8, 9), (10, 11))

CLAUSE_IN: LabelPairs = ((1, 2), (3, 4))
CLAUSE_TAR: LabelPairs = ((2, 3), (4, 1))


class Builder:
    """Accumulates role-tagged vertices and edges; vertices are numbered in order."""

    def __init__(self):
        self.roles: list[str] = []
        self.edges: set = set()
        self.gadgets: dict[str, dict[int, int]] = {}

    @property
    def n(self) -> int:
        return len(self.roles)

    def vertex(self, tag: str) -> int:
        self.roles.append(tag)
        return len(self.roles) - 1

    def edge(self, u: int, v: int) -> None:
        if u == v:
            raise ReductionError(f"self-loop at {u}")
        self.edges.add(canonical_edge(u, v))

    def gadget(self, shape: GadgetShape, name: str) -> dict[int, int]:
        labels = {lab: self.vertex(f"{name}.{lab}") for lab in range(1, shape.size + 1)}
        for a, b in shape.edges():
            self.edge(labels[a], labels[b])
        self.gadgets[name] = labels
        return labels

    def path(self, prefix: str, length: int, anchor: int) -> list[int]:
        """``length`` fresh vertices ``prefix.1 .. prefix.length`` hung off ``anchor``."""
        out = []
        prev = anchor
        for i in range(1, length + 1):
            cur = self.vertex(f"{prefix}.{i}")
            self.edge(prev, cur)
            out.append(cur)
            prev = cur
        return out

    def graph(self) -> Graph:
        return Graph(self.n, tuple(sorted(self.edges)))


def place(labels: dict[int, int], pairs: LabelPairs) -> list[tuple[int, int]]:
    return [(labels[a], labels[b]) for a, b in pairs]


def path_pairs(vertices: list[int], offset: int) -> list[tuple[int, int]]:
    """Consecutive pairs of ``vertices`` starting at index ``offset``."""
    return [(vertices[i], vertices[i + 1]) for i in range(offset, len(vertices) - 1, 2)]


def union_is_single_cycle(shape: GadgetShape, a: LabelPairs, b: LabelPairs) -> bool:
    """True iff the two gadget perfect matchings form one alternating cycle
    through every gadget vertex. Both must be perfect matchings of the shape."""
    n = shape.size + 1          # label 0 acts as a dummy isolated vertex
    edges = set(canonical_edge(*e) for e in shape.edges())
    for x, y in a + b:
        if canonical_edge(x, y) not in edges:
            raise ReductionError(f"({x}, {y}) is not an edge of {shape.kind}")
    ma = OddMatching.from_edges(n, a)
    mb = OddMatching.from_edges(n, b)
    d = decompose_union(ma, mb)
    return not d.happy_edges and len(d.cycles) == 1 and len(d.cycles[0]) == shape.size


def assert_single_cycle(shape: GadgetShape, a: LabelPairs, b: LabelPairs) -> None:
    if not union_is_single_cycle(shape, a, b):
        raise ReductionError(f"{shape.kind}: matchings do not form a single alternating cycle")
