"""Cross-checks of the constructions against exact search and brute-force oracles.

Every check returns ``VerificationReport`` values whose observed numbers come
from ``search`` (exact BFS) or ``oracles`` (exhaustive enumeration), never from
the constructions' own bookkeeping.
"""

from __future__ import annotations

import hashlib
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence

from .connectivity import is_flip_connected
from .errors import SearchCapExceeded
from .graph import Graph
from .matching import OddMatching, charging_lower_bound, decompose_union
from .oracles import (exists_completion, min_set_cover, solve_exists_forall_exists,
                      solve_forall_exists)
from .reductions.diameter import build_diameter_instance, build_witness_pair
from .reductions.formula import QuantifiedFormula, SetCoverInstance
from .reductions.gadgets import (CLAUSE4, CLAUSE_IN, CLAUSE_TAR, CROSSED12,
                                 CROSSED12_DIAG, CROSSED14, CROSSED14_X, CROSSED14_Y,
                                 EXISTS12, Builder, GadgetShape, LabelPairs, place,
                                 rim_a, rim_b)
from .reductions.params import ReductionParams
from .reductions.radius import build_radius_instance, build_radius_witnesses
from .reductions.setcover import (build_setcover_instance, cover_is_valid,
                                  recover_cover)
from .search import (bfs_levels, build_flip_graph, all_eccentricities,
                     enumerate_odd_matchings, flip_distance)

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class VerificationReport:
    name: str
    digest: str
    expected: str
    observed: str
    status: str
    nodes_expanded: int = 0
    details: str = ""
    wall_time: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def line(self) -> str:
        """One report line; wall time is left out so output is reproducible."""
        out = (f"CHECK {self.name} {self.status} expected={self.expected} "
               f"observed={self.observed} nodes={self.nodes_expanded} digest={self.digest}")
        return out + (f" {self.details}" if self.details else "")


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


# --- cycle switch -------------------------------------------------------------

def anchored_cycle(k: int) -> tuple[Graph, OddMatching, OddMatching]:
    """A 2k-cycle on vertices 1..2k with pendant anchor 0 attached to vertex 1.

    Both matchings isolate the anchor and alternate on the cycle.
    """
    n = 2 * k + 1
    edges = [(0, 1)] + [(i, i % (2 * k) + 1) for i in range(1, 2 * k + 1)]
    g = Graph.from_edges(n, edges)
    a = OddMatching.from_edges(n, [(i, i + 1) for i in range(1, 2 * k, 2)])
    b = OddMatching.from_edges(n, [(i, i % (2 * k) + 1) for i in range(2, 2 * k + 1, 2)])
    return g, a, b


def check_cycle_switch(k: int) -> VerificationReport:
    if not 2 <= k <= 6:
        raise ValueError("cycle switch checks need 2 <= k <= 6")
    with _Timer() as tm:
        g, a, b = anchored_cycle(k)
        rep = flip_distance(g, a, b)
    ok = rep.distance == k + 1
    return VerificationReport(f"cycle_switch.k{k}", _digest(f"cycle {k}"), str(k + 1),
                              str(rep.distance), PASS if ok else FAIL,
                              rep.nodes_expanded, "", tm.elapsed)


# --- gadget cost table --------------------------------------------------------

@dataclass(frozen=True)
class GadgetCostExpectation:
    """Flips charged to one gadget for one union state.

    ``side`` names which clause stubs must be switched: ``pos``, ``neg``,
    ``both``, or ``min`` (the cheaper of ``pos`` and ``neg``).
    """

    kind: str
    state: str
    side: str
    m_in: LabelPairs
    m_tar: LabelPairs
    expected_flips: int

    @property
    def name(self) -> str:
        return f"gadget.{self.kind}.{self.state}.{self.side}"


def gadget_context(shape: GadgetShape, m_in: LabelPairs, m_tar: LabelPairs,
                   switched: Sequence[bool]) -> tuple[Graph, OddMatching, OddMatching]:
    """Central vertex ``v`` (isolated in both) wired to the gadget's entries, plus
    one stub clause 4-cycle per literal side wired to that side's ports.

    Stubs for the sides in ``switched`` (True = positive) alternate between the
    two matchings; the other stub is happy.
    """
    b = Builder()
    v = b.vertex("v")
    lab = b.gadget(shape, "g")
    for e in shape.entry:
        b.edge(v, lab[e])
    stubs = {}
    for positive in (True, False):
        s = b.gadget(CLAUSE4, "pos" if positive else "neg")
        stubs[positive] = s
        for p in shape.ports(positive):
            b.edge(lab[p], s[1])
    g = b.graph()
    e_in = place(lab, m_in)
    e_tar = place(lab, m_tar)
    for positive, s in stubs.items():
        e_in += place(s, CLAUSE_IN)
        e_tar += place(s, CLAUSE_TAR if positive in switched else CLAUSE_IN)
    return g, OddMatching.from_edges(g.n, e_in), OddMatching.from_edges(g.n, e_tar)


def gadget_cost(shape: GadgetShape, m_in: LabelPairs, m_tar: LabelPairs,
                side: str) -> tuple[int, int]:
    """(flips charged to the gadget, nodes expanded); each switched stub costs 3."""
    if side == "min":
        a = gadget_cost(shape, m_in, m_tar, "pos")
        b = gadget_cost(shape, m_in, m_tar, "neg")
        return min(a[0], b[0]), a[1] + b[1]
    sides = {"pos": (True,), "neg": (False,), "both": (True, False)}
    if side not in sides:
        raise ValueError(f"side must be pos, neg, both or min, got {side!r}")
    switched = sides[side]
    g, a, b = gadget_context(shape, m_in, m_tar, switched)
    rep = flip_distance(g, a, b)
    return rep.distance - 3 * len(switched), rep.nodes_expanded


_SHAPES = {s.kind: s for s in (EXISTS12, CROSSED12, CROSSED14, CLAUSE4)}
_R12A, _R12B, _R14A, _R14B = rim_a(12), rim_b(12), rim_a(14), rim_b(14)


def _row(kind, state, pairs, m_in, m_tar):
    return [GadgetCostExpectation(kind, state, side, m_in, m_tar, flips)
            for side, flips in pairs]


# Flip counts stated for each gadget state. Cycle states: the literal side the
# switch naturally visits, then the opposite side.
GADGET_TABLE: tuple[GadgetCostExpectation, ...] = tuple(
    _row("exists12", "cycle", [("pos", 7), ("neg", 7)], _R12A, _R12B)
    + _row("exists12", "happy_rim_a", [("min", 4)], _R12A, _R12A)
    + _row("exists12", "happy_rim_b", [("min", 4)], _R12B, _R12B)
    + _row("crossed12", "uncrossed_cycle", [("pos", 7), ("neg", 9)], _R12A, _R12B)
    + _row("crossed12", "crossed_cycle", [("neg", 7), ("pos", 9)], _R12A, CROSSED12_DIAG)
    + _row("crossed12", "happy_rim_a", [("min", 4), ("both", 6)], _R12A, _R12A)
    + _row("crossed12", "happy_rim_b", [("min", 4), ("both", 6)], _R12B, _R12B)
    + _row("crossed12", "happy_diag", [("min", 4), ("both", 6)], CROSSED12_DIAG, CROSSED12_DIAG)
    + _row("crossed12", "small_cycle", [("both", 5)], _R12B, CROSSED12_DIAG)
    + _row("crossed12", "small_cycle_rev", [("both", 5)], CROSSED12_DIAG, _R12B)
    + _row("crossed14", "zero_crossings", [("pos", 8), ("neg", 10)], _R14A, _R14B)
    + _row("crossed14", "two_crossings", [("pos", 8), ("neg", 10)], CROSSED14_X, CROSSED14_Y)
    + _row("crossed14", "one_crossing_a", [("neg", 8), ("pos", 10)], _R14A, CROSSED14_Y)
    + _row("crossed14", "one_crossing_b", [("neg", 8), ("pos", 10)], CROSSED14_X, _R14B)
)


def clause_cost() -> tuple[int, int]:
    """Clause 4-cycle with its port next to the isolated vertex."""
    b = Builder()
    v = b.vertex("v")
    lab = b.gadget(CLAUSE4, "clause")
    b.edge(v, lab[1])
    g = b.graph()
    rep = flip_distance(g, OddMatching.from_edges(g.n, place(lab, CLAUSE_IN)),
                        OddMatching.from_edges(g.n, place(lab, CLAUSE_TAR)))
    return rep.distance, rep.nodes_expanded


def check_gadget_costs(table: Iterable[GadgetCostExpectation] = GADGET_TABLE
                       ) -> list[VerificationReport]:
    reports = []
    for exp in table:
        with _Timer() as tm:
            got, nodes = gadget_cost(_SHAPES[exp.kind], exp.m_in, exp.m_tar, exp.side)
        reports.append(VerificationReport(
            exp.name, _digest(repr((exp.m_in, exp.m_tar))), str(exp.expected_flips),
            str(got), PASS if got == exp.expected_flips else FAIL, nodes, "", tm.elapsed))
    with _Timer() as tm:
        got, nodes = clause_cost()
    reports.append(VerificationReport("gadget.clause4.cycle.port", _digest("clause"), "3",
                                      str(got), PASS if got == 3 else FAIL, nodes, "",
                                      tm.elapsed))
    return reports


# --- reductions ---------------------------------------------------------------

def _tier_b_diameter(g: Graph, budget: Optional[int]) -> Optional[int]:
    """Exact flip-graph diameter, or None when the state count exceeds ``budget``."""
    if budget is None:
        return None
    try:
        fg = build_flip_graph(g, cap=budget)
    except SearchCapExceeded:
        return None
    return int(all_eccentricities(fg).max())


def _tier_b_radius(g: Graph, budget: Optional[int]) -> Optional[int]:
    if budget is None:
        return None
    try:
        fg = build_flip_graph(g, cap=budget)
    except SearchCapExceeded:
        return None
    return int(all_eccentricities(fg).min())


def check_diameter_reduction(phi: QuantifiedFormula,
                             params: ReductionParams = ReductionParams(),
                             budget: Optional[int] = None) -> VerificationReport:
    """Tier A: for every universal assignment, witness distance <= threshold iff
    some existential assignment satisfies the formula. Tier B (when the flip
    graph has at most ``budget`` states): exact diameter <= threshold iff the
    formula is true."""
    with _Timer() as tm:
        verdict = solve_forall_exists(phi)
        inst = build_diameter_instance(phi, params)
        nodes = 0
        mismatches = []
        cells = []
        for x, y in verdict.witness:
            a, b = build_witness_pair(inst, x)
            rep = flip_distance(inst.graph, a, b)
            nodes += rep.nodes_expanded
            lb = charging_lower_bound(decompose_union(a, b))
            if lb > rep.distance:
                mismatches.append(f"lb{''.join(map(str, x))}")
            within = rep.distance <= inst.threshold
            cells.append(f"{''.join(map(str, x))}:{rep.distance}")
            if within != (y is not None):
                mismatches.append("x=" + "".join(map(str, x)))
        diam = _tier_b_diameter(inst.graph, budget)
    tier_b = "skip"
    if diam is not None:
        tier_b = f"{diam}"
        if (diam <= inst.threshold) != verdict.satisfied:
            mismatches.append("tier_b")
    status = FAIL if mismatches else PASS
    details = (f"ell={inst.ell} threshold={inst.threshold} distances={','.join(cells)} "
               f"tier_b={tier_b}" + (f" mismatches={','.join(mismatches)}" if mismatches else ""))
    return VerificationReport(f"diameter_reduction.{phi.digest()}", phi.digest(),
                              "yes" if verdict.satisfied else "no",
                              "mismatch" if mismatches else ("yes" if verdict.satisfied else "no"),
                              status, nodes, details, tm.elapsed)


def check_radius_reduction(psi: QuantifiedFormula,
                           params: ReductionParams = ReductionParams(),
                           budget: Optional[int] = None) -> VerificationReport:
    """Tier A over every (x, y) pair: witness distance <= threshold iff some z
    satisfies the formula under (x, y). This covers the oracle's x-witness against
    every y and every non-witness x. Tier B as in the diameter check, on radius."""
    m1, m2, _ = psi.sizes
    with _Timer() as tm:
        verdict = solve_exists_forall_exists(psi)
        inst = build_radius_instance(psi, params)
        nodes = 0
        mismatches = []
        cells = []
        for x in product((0, 1), repeat=m1):
            for y in product((0, 1), repeat=m2):
                a, b = build_radius_witnesses(inst, x, y)
                rep = flip_distance(inst.graph, a, b)
                nodes += rep.nodes_expanded
                tag = "".join(map(str, x)) + "|" + "".join(map(str, y))
                cells.append(f"{tag}:{rep.distance}")
                sat = exists_completion(psi, x + y) is not None
                if (rep.distance <= inst.threshold) != sat:
                    mismatches.append(tag)
        rad = _tier_b_radius(inst.graph, budget)
    tier_b = "skip"
    if rad is not None:
        tier_b = f"{rad}"
        if (rad <= inst.threshold) != verdict.satisfied:
            mismatches.append("tier_b")
    status = FAIL if mismatches else PASS
    details = (f"ell={inst.ell} L={inst.L} threshold={inst.threshold} "
               f"distances={','.join(cells)} tier_b={tier_b}"
               + (f" mismatches={','.join(mismatches)}" if mismatches else ""))
    return VerificationReport(f"radius_reduction.{psi.digest()}", psi.digest(),
                              "yes" if verdict.satisfied else "no",
                              "mismatch" if mismatches else ("yes" if verdict.satisfied else "no"),
                              status, nodes, details, tm.elapsed)


def check_setcover_reduction(sc: SetCoverInstance,
                             params: ReductionParams = ReductionParams()) -> VerificationReport:
    """Exact distance equals ``c* * V + 3n`` and the cover recovered from the
    shortest witness is valid with size ``c*``."""
    with _Timer() as tm:
        c_star, _ = min_set_cover(sc)
        red = build_setcover_instance(sc, params)
        rep = flip_distance(red.graph, red.m_in, red.m_tar)
        cover, bound = recover_cover(red, rep.witness)
    want = red.distance_for(c_star)
    ok = (rep.distance == want and cover_is_valid(sc, cover) and len(cover) == c_star
          and bound == c_star)
    details = (f"V={red.path_len} c_star={c_star} cover={','.join(map(str, sorted(cover)))} "
               f"size_bound={bound}")
    return VerificationReport(f"setcover_reduction.{sc.digest()}", sc.digest(), str(want),
                              str(rep.distance), PASS if ok else FAIL, rep.nodes_expanded,
                              details, tm.elapsed)


# --- arithmetic ---------------------------------------------------------------

def _frac(x) -> Fraction:
    return Fraction(str(x)) if isinstance(x, float) else Fraction(x)


def ap_case_holds(r, c_star) -> bool:
    """The two-case estimate behind the factor-4 recovery guarantee."""
    r, c = _frac(r), Fraction(c_star)
    lhs = r * c + r / 2
    if r - 1 >= Fraction(1, 2 * c_star + 1):
        return lhs <= c * (1 + 4 * (r - 1))
    return lhs < c + 1


def check_ap_arithmetic(samples: Iterable[tuple]) -> VerificationReport:
    with _Timer() as tm:
        samples = list(samples)
        bad = []
        for r, c in samples:
            if _frac(r) < 1 or c < 1:
                raise ValueError("samples need r >= 1 and c_star >= 1")
            if not ap_case_holds(r, c):
                bad.append((r, c))
    details = f"samples={len(samples)}" + (f" first_violation={bad[0]}" if bad else "")
    return VerificationReport("ap_arithmetic", _digest(repr(samples)), "0", str(len(bad)),
                              FAIL if bad else PASS, 0, details, tm.elapsed)


def ap_grid() -> list[tuple[float, int]]:
    """r in 1, 1.01, ..., 3 crossed with c* in 1..50."""
    return [(round(1 + i / 100, 2), c) for i in range(201) for c in range(1, 51)]


# --- connectivity and metric properties ---------------------------------------

def all_graphs(n: int):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if rng.random() < p])


def flip_connected_by_search(g: Graph) -> bool:
    return build_flip_graph(g).component_count() <= 1


def check_connectivity_agreement(seed: int = 0, samples7: int = 200,
                                 extra: Iterable[Graph] = ()) -> VerificationReport:
    """Polynomial test vs explicit component count on every 5-vertex graph,
    ``samples7`` seeded random 7-vertex graphs, and any ``extra`` graphs (which
    must also be connected, e.g. generated reduction instances)."""
    rng = random.Random(seed)
    with _Timer() as tm:
        graphs = list(all_graphs(5))
        graphs += [random_graph(rng, 7, rng.uniform(0.15, 0.75)) for _ in range(samples7)]
        disagree = []
        disconnected = 0
        first_disconnected = None
        for g in graphs:
            fast, _ = is_flip_connected(g)
            slow = flip_connected_by_search(g)
            if fast != slow:
                disagree.append(g)
            if not slow:
                disconnected += 1
                if first_disconnected is None:
                    first_disconnected = g
        extra = list(extra)
        extra_bad = 0
        for g in extra:
            fast, _ = is_flip_connected(g)
            if not fast or not flip_connected_by_search(g):
                extra_bad += 1
    details = (f"graphs={len(graphs)} disconnected={disconnected} extra={len(extra)} "
               f"extra_disconnected={extra_bad}")
    if first_disconnected is not None:
        details += f" example_edges={'/'.join(f'{u + 1}-{v + 1}' for u, v in first_disconnected.edges)}"
    ok = not disagree and not extra_bad
    return VerificationReport(f"connectivity_agreement.seed{seed}", _digest(f"conn {seed}"),
                              "0", str(len(disagree) + extra_bad), PASS if ok else FAIL,
                              0, details, tm.elapsed)


def _sample_pair(rng: random.Random, max_n: int, cap: int = 20000):
    """Random graph with at least two odd matchings and two of its matchings."""
    while True:
        n = rng.choice([k for k in range(3, max_n + 1, 2)])
        g = random_graph(rng, n, rng.uniform(0.2, 0.8))
        try:
            states = enumerate_odd_matchings(g, cap=cap)
        except SearchCapExceeded:
            continue
        if len(states) >= 2:
            return g, states


def check_charging_soundness(seed: int = 0, samples: int = 500,
                             max_n: int = 11) -> VerificationReport:
    """charging lower bound <= exact distance on random reachable pairs."""
    rng = random.Random(seed)
    with _Timer() as tm:
        done = violations = unreachable = nodes = 0
        while done < samples:
            g, states = _sample_pair(rng, max_n)
            a, b = rng.sample(states, 2)
            rep = flip_distance(g, a, b)
            nodes += rep.nodes_expanded
            if rep.distance is None:
                unreachable += 1
                continue
            done += 1
            if charging_lower_bound(decompose_union(a, b)) > rep.distance:
                violations += 1
    return VerificationReport(f"charging_soundness.seed{seed}", _digest(f"charge {seed}"),
                              "0", str(violations), FAIL if violations else PASS, nodes,
                              f"samples={done} unreachable_skipped={unreachable}", tm.elapsed)


def check_metric_properties(seed: int = 0, triples: int = 1000, graphs: int = 150,
                            max_n: int = 9) -> VerificationReport:
    """Symmetry and triangle inequality on sampled triples; radius <= diameter
    <= 2 radius on every sampled graph with a connected flip graph."""
    rng = random.Random(seed)
    with _Timer() as tm:
        bad_sym = bad_tri = bad_rd = done = checked_graphs = 0
        while done < triples or checked_graphs < graphs:
            g, states = _sample_pair(rng, max_n)
            fg = build_flip_graph(g)
            if fg.component_count() != 1:
                continue
            if checked_graphs < graphs:
                ecc = all_eccentricities(fg)
                r, d = int(ecc.min()), int(ecc.max())
                checked_graphs += 1
                if not r <= d <= 2 * r:
                    bad_rd += 1
            for _ in range(min(10, triples - done)):
                a, b, c = (rng.choice(states) for _ in range(3))
                da, db = bfs_levels(g, a), bfs_levels(g, b)
                d_ab, d_ba = flip_distance(g, a, b).distance, flip_distance(g, b, a).distance
                if d_ab != d_ba or d_ab != da[b.mate] or db[a.mate] != d_ab:
                    bad_sym += 1
                if da[c.mate] > da[b.mate] + db[c.mate]:
                    bad_tri += 1
                done += 1
    bad = bad_sym + bad_tri + bad_rd
    return VerificationReport(
        f"metric_properties.seed{seed}", _digest(f"metric {seed}"), "0", str(bad),
        FAIL if bad else PASS, 0,
        f"triples={done} graphs={checked_graphs} symmetry={bad_sym} triangle={bad_tri} "
        f"radius_diameter={bad_rd}", tm.elapsed)


# --- suites -------------------------------------------------------------------

SUITES = ("all", "gadgets", "reductions", "connectivity", "arithmetic", "properties")

SMALL_DIAMETER = (
    QuantifiedFormula.forall_exists(1, 1, [(1, 2)]),
    QuantifiedFormula.forall_exists(1, 1, [(1,), (2,)]),
    QuantifiedFormula.forall_exists(2, 2, [(1, -2, 3), (2, 3, -4)]),
)
SMALL_RADIUS = (
    QuantifiedFormula.exists_forall_exists(1, 1, 1, [(1, 2, 3)]),
    QuantifiedFormula.exists_forall_exists(1, 1, 1, [(2,)]),
    QuantifiedFormula.exists_forall_exists(1, 1, 1, [(-1, 3), (-1, -3)]),
)
SMALL_SETCOVER = (
    SetCoverInstance.of(1, [{1}]),
    SetCoverInstance.of(2, [{1}, {2}, {1, 2}]),
    SetCoverInstance.of(2, [{1}, {2}]),
)


def _call(task):
    fn, args = task
    out = fn(*args)
    return out if isinstance(out, list) else [out]


def _ap_default() -> VerificationReport:
    return check_ap_arithmetic(ap_grid())


def _connectivity_default(seed: int) -> VerificationReport:
    extra = [build_diameter_instance(phi).graph for phi in SMALL_DIAMETER[:2]]
    return check_connectivity_agreement(seed, extra=extra)


def suite_tasks(suite: str = "all", seed: int = 0, budget: Optional[int] = None) -> list:
    """Independent ``(function, args)`` checks making up a suite."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    want = set(SUITES[1:]) if suite == "all" else {suite}
    tasks: list = []
    if "gadgets" in want:
        tasks += [(check_cycle_switch, (k,)) for k in range(2, 7)]
        tasks.append((check_gadget_costs, ()))
    if "reductions" in want:
        tasks += [(check_diameter_reduction, (phi, ReductionParams(), budget))
                  for phi in SMALL_DIAMETER]
        tasks += [(check_radius_reduction, (psi, ReductionParams(), budget))
                  for psi in SMALL_RADIUS]
        tasks += [(check_setcover_reduction, (sc,)) for sc in SMALL_SETCOVER]
    if "connectivity" in want:
        tasks.append((_connectivity_default, (seed,)))
    if "arithmetic" in want:
        tasks.append((_ap_default, ()))
    if "properties" in want:
        tasks.append((check_charging_soundness, (seed,)))
        tasks.append((check_metric_properties, (seed,)))
    return tasks


def run_suite(suite: str = "all", seed: int = 0, budget: Optional[int] = None,
              jobs: int = 1) -> list[VerificationReport]:
    """Reports of one suite sorted by check name; ``jobs`` > 1 runs checks in
    worker processes without changing the result."""
    tasks = suite_tasks(suite, seed, budget)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_call, tasks))
    else:
        parts = [_call(t) for t in tasks]
    return sorted((r for part in parts for r in part), key=lambda r: r.name)
