"""Forall-exists SAT to flip-graph diameter.

Layout (vertex ids in this order): central vertex ``v``; one CROSSED12 gadget per
universal variable; one EXISTS12 gadget per existential variable; one 4-cycle
per clause whose position 1 is the port; the forcing path ``P.1 .. P.ell`` hung
off ``v`` with far endpoint ``w = P.ell``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..errors import ReductionError
from ..graph import Graph
from ..matching import OddMatching, decompose_union
from .formula import EXISTS, FORALL, QuantifiedFormula
from .gadgets import (CLAUSE4, CLAUSE_IN, CLAUSE_TAR, CROSSED12, CROSSED12_DIAG,
                      EXISTS12, Builder, assert_single_cycle, path_pairs, place,
                      rim_a, rim_b)
from .params import ReductionParams, forcing_length


@dataclass(frozen=True)
class DiameterInstance:
    formula: QuantifiedFormula
    params: ReductionParams
    graph: Graph
    v: int
    w: int
    ell: int
    threshold: int
    s: int                          # vertices in clause and variable gadgets
    core_diameter: Optional[int]    # oracle diameter of the graph without P
    roles: tuple[str, ...]
    gadget_index: dict              # "forall.i" / "exists1.j" / "clause.k" -> {label: vertex}
    path: tuple[int, ...]           # P.1 .. P.ell

    @property
    def m1(self) -> int:
        return self.formula.sizes[0]

    @property
    def m2(self) -> int:
        return self.formula.sizes[1]


def wire_clauses(b: Builder, formula: QuantifiedFormula, blocks: Sequence[tuple[str, object]]):
    """Add one clause 4-cycle per clause and connect its port to literal ports.

    ``blocks[i]`` is ``(tag, shape)`` for quantifier block ``i``; gadget names are
    ``f"{tag}.{index}"`` with 1-based index.
    """
    for k, clause in enumerate(formula.clauses, start=1):
        labels = b.gadget(CLAUSE4, f"clause.{k}")
        port = labels[1]
        for lit in clause:
            block, idx = formula.locate(abs(lit))
            tag, shape = blocks[block]
            g = b.gadgets[f"{tag}.{idx + 1}"]
            for lab in shape.ports(lit > 0):
                b.edge(g[lab], port)


def _core(formula: QuantifiedFormula, blocks) -> tuple[Builder, int]:
    b = Builder()
    v = b.vertex("v")
    for block, (tag, shape) in enumerate(blocks):
        for i in range(1, formula.sizes[block] + 1):
            labels = b.gadget(shape, f"{tag}.{i}")
            for lab in shape.entry:
                b.edge(v, labels[lab])
    wire_clauses(b, formula, blocks)
    return b, v


DIAMETER_BLOCKS = (("forall", CROSSED12), ("exists1", EXISTS12))


def diameter_threshold(ell: int, m1: int, m2: int, K: int) -> int:
    return ell + 7 * (m1 + m2) + 3 * K


def build_diameter_instance(phi: QuantifiedFormula,
                            params: ReductionParams = ReductionParams()) -> DiameterInstance:
    if phi.shape != FORALL + EXISTS:
        raise ReductionError(f"diameter reduction needs a forall-exists prefix, got {phi.shape!r}")
    b, v = _core(phi, DIAMETER_BLOCKS)
    s = b.n - 1
    ell, d0 = forcing_length(params, params.ell_override,
                             lambda: 2 * params.require_c() * (s + 1), b.graph)
    path = b.path("P", ell, v)
    g = b.graph()
    if g.n % 2 == 0 or g.n != 1 + 12 * phi.sizes[0] + 12 * phi.sizes[1] + 4 * phi.K + ell:
        raise ReductionError("internal: unexpected vertex count")
    return DiameterInstance(
        formula=phi, params=params, graph=g, v=v, w=path[-1], ell=ell,
        threshold=diameter_threshold(ell, phi.sizes[0], phi.sizes[1], phi.K),
        s=s, core_diameter=d0, roles=tuple(b.roles), gadget_index=b.gadgets,
        path=tuple(path))


def build_witness_pair(inst: DiameterInstance,
                       x_assignment: Sequence[int]) -> tuple[OddMatching, OddMatching]:
    """Matchings isolating ``w`` whose union switches every gadget.

    The universal gadget of a true variable carries the uncrossed rim cycle, that
    of a false variable the crossed cycle.
    """
    if len(x_assignment) != inst.m1:
        raise ReductionError(f"expected {inst.m1} universal values, got {len(x_assignment)}")
    path = [inst.v, *inst.path]
    common = path_pairs(path, 0)        # v-P1, P2-P3, ..., w isolated
    m_in, m_tar = list(common), list(common)
    for i, val in enumerate(x_assignment, start=1):
        lab = inst.gadget_index[f"forall.{i}"]
        tar = rim_b(12) if val else CROSSED12_DIAG
        assert_single_cycle(CROSSED12, rim_a(12), tar)
        m_in += place(lab, rim_a(12))
        m_tar += place(lab, tar)
    for j in range(1, inst.m2 + 1):
        lab = inst.gadget_index[f"exists1.{j}"]
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


def _check_structure(inst: DiameterInstance, a: OddMatching, b: OddMatching) -> None:
    """Isolated vertex at ``w`` in both; one alternating cycle per gadget."""
    d = decompose_union(a, b)
    if d.path != (inst.w,):
        raise ReductionError("witness pair must isolate w in both matchings")
    covered = {frozenset(c) for c in d.cycles}
    for name, labels in inst.gadget_index.items():
        if frozenset(labels.values()) not in covered:
            raise ReductionError(f"no alternating cycle on gadget {name}")
    if len(d.cycles) != len(inst.gadget_index):
        raise ReductionError("unexpected alternating cycles outside the gadgets")
