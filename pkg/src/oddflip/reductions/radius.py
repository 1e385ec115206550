"""Exists-forall-exists SAT to flip-graph radius.

Layout (vertex ids in this order): ``v``; CROSSED12 gadgets for the first
existential block; CROSSED14 gadgets for the universal block; EXISTS12 gadgets for
the last existential block; clause 4-cycles; path ``p.1 .. p.ell`` from ``v``
ending in the 4-cycle ``Z.1 .. Z.4`` (``Z.1`` adjacent to ``p.ell``); path
``P.1 .. P.L`` from ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..errors import ReductionError
from ..graph import Graph
from ..matching import OddMatching, decompose_union
from .diameter import _core
from .formula import EXISTS, FORALL, QuantifiedFormula
from .gadgets import (CLAUSE4, CLAUSE_IN, CLAUSE_TAR, CROSSED12, CROSSED12_DIAG,
                      CROSSED14, CROSSED14_Y, EXISTS12, Builder,
                      assert_single_cycle, path_pairs, place, rim_a, rim_b)
from .params import ReductionParams, forcing_length

RADIUS_BLOCKS = (("exists1", CROSSED12), ("forall", CROSSED14), ("exists2", EXISTS12))


@dataclass(frozen=True)
class RadiusInstance:
    formula: QuantifiedFormula
    params: ReductionParams
    graph: Graph
    v: int
    ell: int
    L: int
    Z: tuple[int, int, int, int]
    threshold: int
    s: int
    core_diameter: Optional[int]    # oracle diameter of v plus gadgets
    tail_diameter: Optional[int]    # oracle diameter of the graph without P
    roles: tuple[str, ...]
    gadget_index: dict
    short_path: tuple[int, ...]     # p.1 .. p.ell
    long_path: tuple[int, ...]      # P.1 .. P.L

    @property
    def sizes(self) -> tuple[int, int, int]:
        return self.formula.sizes


def radius_threshold(ell: int, L: int, m1: int, m2: int, m3: int, K: int) -> int:
    return (L + ell) // 2 + 7 * (m1 + m3) + 8 * m2 + 3 * K + 2


def _with_tail(b: Builder, v: int, ell: int) -> tuple[list[int], list[int]]:
    p = b.path("p", ell, v)
    z = [b.vertex(f"Z.{i}") for i in range(1, 5)]
    b.edge(p[-1], z[0])
    for i in range(4):
        b.edge(z[i], z[(i + 1) % 4])
    return p, z


def build_radius_instance(psi: QuantifiedFormula,
                          params: ReductionParams = ReductionParams()) -> RadiusInstance:
    if psi.shape != EXISTS + FORALL + EXISTS:
        raise ReductionError(
            f"radius reduction needs an exists-forall-exists prefix, got {psi.shape!r}")
    b, v = _core(psi, RADIUS_BLOCKS)
    s = b.n - 1
    ell, d0 = forcing_length(params, params.ell_override,
                             lambda: 2 * params.require_c() * (s + 1), b.graph)

    def tail_graph() -> Graph:
        t, tv = _core(psi, RADIUS_BLOCKS)
        _with_tail(t, tv, ell)
        return t.graph()

    L, d1 = forcing_length(params, params.L_override,
                           lambda: 2 * params.require_c() * (s + ell + 1), tail_graph)
    p, z = _with_tail(b, v, ell)
    P = b.path("P", L, v)
    g = b.graph()
    m1, m2, m3 = psi.sizes
    if g.n % 2 == 0 or g.n != 1 + 12 * m1 + 14 * m2 + 12 * m3 + 4 * psi.K + ell + 4 + L:
        raise ReductionError("internal: unexpected vertex count")
    return RadiusInstance(
        formula=psi, params=params, graph=g, v=v, ell=ell, L=L, Z=tuple(z),
        threshold=radius_threshold(ell, L, m1, m2, m3, psi.K), s=s,
        core_diameter=d0, tail_diameter=d1, roles=tuple(b.roles),
        gadget_index=b.gadgets, short_path=tuple(p), long_path=tuple(P))


def build_radius_witnesses(inst: RadiusInstance, x_assignment: Sequence[int],
                           y_assignment: Sequence[int]) -> tuple[OddMatching, OddMatching]:
    """``M_in`` isolates ``Z.2`` and fixes the first existential block by ``x``;
    ``M_tar`` isolates ``P.L`` and picks each universal gadget's crossing parity
    by ``y`` (uncrossed for true, one crossing for false)."""
    m1, m2, m3 = inst.sizes
    if len(x_assignment) != m1 or len(y_assignment) != m2:
        raise ReductionError(f"expected {m1} first-block and {m2} universal values")
    z1, z2, z3, z4 = inst.Z
    p, P = list(inst.short_path), list(inst.long_path)
    m_in = [(z1, p[-1]), (z3, z4)] + path_pairs([inst.v, *p], 0) + path_pairs(P, 0)
    m_tar = [(z2, z3), (z4, z1)] + path_pairs(p, 0) + path_pairs([inst.v, *P], 0)
    for i, val in enumerate(x_assignment, start=1):
        lab = inst.gadget_index[f"exists1.{i}"]
        start = rim_b(12) if val else CROSSED12_DIAG
        assert_single_cycle(CROSSED12, start, rim_a(12))
        m_in += place(lab, start)
        m_tar += place(lab, rim_a(12))
    for j, val in enumerate(y_assignment, start=1):
        lab = inst.gadget_index[f"forall.{j}"]
        tar = rim_b(14) if val else CROSSED14_Y
        assert_single_cycle(CROSSED14, rim_a(14), tar)
        m_in += place(lab, rim_a(14))
        m_tar += place(lab, tar)
    for k in range(1, m3 + 1):
        lab = inst.gadget_index[f"exists2.{k}"]
        m_in += place(lab, rim_a(12))
        m_tar += place(lab, rim_b(12))
    for k in range(1, inst.formula.K + 1):
        lab = inst.gadget_index[f"clause.{k}"]
        m_in += place(lab, CLAUSE_IN)
        m_tar += place(lab, CLAUSE_TAR)
    n = inst.graph.n
    a = OddMatching.from_edges(n, m_in).check(inst.graph)
    b = OddMatching.from_edges(n, m_tar).check(inst.graph)
    _check_structure(inst, a, b)
    return a, b


def _check_structure(inst: RadiusInstance, a: OddMatching, b: OddMatching) -> None:
    """Isolated vertices on ``Z`` and at the end of ``P``; cycle on every gadget."""
    if a.isolated not in inst.Z or b.isolated != inst.long_path[-1]:
        raise ReductionError("witness isolated vertices misplaced")
    d = decompose_union(a, b)
    covered = {frozenset(c) for c in d.cycles}
    for name, labels in inst.gadget_index.items():
        if frozenset(labels.values()) not in covered:
            raise ReductionError(f"no alternating cycle on gadget {name}")
    if len(d.cycles) != len(inst.gadget_index):
        raise ReductionError("unexpected alternating cycles outside the gadgets")
