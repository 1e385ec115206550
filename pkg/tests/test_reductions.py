"""Reduction builders. Distances and forcing lengths below were measured once by
exact search and are frozen here as regression values."""

import pytest
from hypothesis import given, settings, strategies as st

from oddflip.connectivity import is_flip_connected
from oddflip.errors import IllegalFlip, ReductionError
from oddflip.graph import Graph, bipartition, connected_components
from oddflip.matching import FlipSequence, charging_lower_bound, decompose_union
from oddflip.oracles import min_set_cover
from oddflip.reductions import io as rio
from oddflip.reductions.diameter import (build_diameter_instance, build_witness_pair,
                                         diameter_threshold)
from oddflip.reductions.formula import QuantifiedFormula, SetCoverInstance
from oddflip.reductions.gadgets import (CROSSED12, CROSSED12_DIAG, CROSSED14, CROSSED14_X,
                                        CROSSED14_Y, EXISTS12, rim_a, rim_b,
                                        union_is_single_cycle)
from oddflip.reductions.params import CLOSED_FORM, ReductionParams, smallest_even_above
from oddflip.reductions.radius import (build_radius_instance, build_radius_witnesses,
                                       radius_threshold)
from oddflip.reductions.setcover import (build_setcover_instance, canonical_sequence,
                                         cover_is_valid, default_path_len, from_parts,
                                         recover_cover)
from oddflip.search import enumerate_odd_matchings, flip_distance

FA = QuantifiedFormula.forall_exists
EFE = QuantifiedFormula.exists_forall_exists
OR_XY = FA(1, 1, [(1, 2)])
X_AND_Y = FA(1, 1, [(1,), (2,)])
FIG = FA(2, 2, [(1, -2, 3), (2, 3, -4)])
OR_XYZ = EFE(1, 1, 1, [(1, 2, 3)])


def test_smallest_even_above():
    assert [smallest_even_above(x) for x in (0, 1, 2, 35, 36)] == [2, 2, 4, 36, 38]


def test_params_validation():
    with pytest.raises(ReductionError):
        ReductionParams(mode="fast")
    with pytest.raises(ReductionError):
        ReductionParams(ell_override=7)
    with pytest.raises(ReductionError):
        ReductionParams(mode=CLOSED_FORM).require_c()
    with pytest.raises(ReductionError):
        build_diameter_instance(OR_XY, ReductionParams(oracle=None))


# --- gadgets ------------------------------------------------------------------

def _norm(pairs):
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


def _perfect_matchings(shape):
    g = Graph.from_edges(shape.size + 1, shape.edges())
    # label 0 is a dummy isolated vertex, so odd matchings are the perfect ones
    return {_norm(m.edges) for m in enumerate_odd_matchings(g) if m.isolated == 0}


def test_gadget_perfect_matchings():
    assert _perfect_matchings(EXISTS12) == {_norm(rim_a(12)), _norm(rim_b(12))}
    assert _norm(CROSSED12_DIAG) in _perfect_matchings(CROSSED12)
    pm14 = _perfect_matchings(CROSSED14)
    assert pm14 == {_norm(p) for p in (rim_a(14), rim_b(14), CROSSED14_X, CROSSED14_Y)}


def test_gadget_cycles():
    assert union_is_single_cycle(CROSSED12, rim_a(12), rim_b(12))
    assert union_is_single_cycle(CROSSED12, rim_a(12), CROSSED12_DIAG)
    assert not union_is_single_cycle(CROSSED12, rim_b(12), CROSSED12_DIAG)
    for a, b in ((rim_a(14), rim_b(14)), (rim_a(14), CROSSED14_Y),
                 (CROSSED14_X, rim_b(14)), (CROSSED14_X, CROSSED14_Y)):
        assert union_is_single_cycle(CROSSED14, a, b)


# --- diameter -----------------------------------------------------------------

@pytest.fixture(scope="module")
def or_xy():
    return build_diameter_instance(OR_XY)


def test_diameter_instance_shape(or_xy):
    inst = or_xy
    assert inst.s == 28 and inst.core_diameter == 18 and inst.ell == 38
    assert inst.threshold == 55 == diameter_threshold(38, 1, 1, 1)
    assert inst.graph.n == 67 and inst.graph.m == 75
    assert inst.w == inst.path[-1] and inst.roles[inst.w] == "P.38"
    assert len(connected_components(inst.graph)) == 1
    assert is_flip_connected(inst.graph) == (True, None)


def test_diameter_witness_distances(or_xy):
    for x in (0, 1):
        a, b = build_witness_pair(or_xy, [x])
        d = charging_lower_bound(decompose_union(a, b))
        assert d == 7 + 7 + 3     # k + 1 flips per gadget cycle with k edges of each matching
        assert flip_distance(or_xy.graph, a, b).distance == 55


def test_diameter_unsatisfiable_case():
    inst = build_diameter_instance(X_AND_Y)
    assert (inst.core_diameter, inst.ell, inst.threshold) == (23, 48, 68)
    got = [flip_distance(inst.graph, *build_witness_pair(inst, [x])).distance for x in (0, 1)]
    assert got == [69, 68]


def test_diameter_two_block_formula():
    inst = build_diameter_instance(FIG)
    assert (inst.s, inst.core_diameter, inst.ell, inst.threshold) == (56, 35, 72, 106)
    for x in ((0, 0), (0, 1), (1, 0), (1, 1)):
        assert flip_distance(inst.graph, *build_witness_pair(inst, x)).distance == 106


def test_diameter_closed_form_mode_and_override():
    inst = build_diameter_instance(OR_XY, ReductionParams(mode=CLOSED_FORM, c_constant=1))
    assert inst.ell == 2 * (28 + 1) and inst.core_diameter is None
    inst = build_diameter_instance(OR_XY, ReductionParams(ell_override=40))
    assert inst.ell == 40 and inst.threshold == 57


def test_diameter_rejects_wrong_prefix():
    with pytest.raises(ReductionError):
        build_diameter_instance(OR_XYZ)
    with pytest.raises(ReductionError):
        build_witness_pair(build_diameter_instance(OR_XY, ReductionParams(ell_override=2)),
                           [1, 0])


# --- radius -------------------------------------------------------------------

@pytest.fixture(scope="module")
def or_xyz():
    return build_radius_instance(OR_XYZ)


def test_radius_instance_shape(or_xyz):
    inst = or_xyz
    assert inst.s == 42 and inst.core_diameter == 26 and inst.ell == 54
    assert inst.tail_diameter == 83 and inst.L == 168
    assert inst.threshold == 138 == radius_threshold(54, 168, 1, 1, 1, 1)
    assert inst.graph.n == 269
    assert len(connected_components(inst.graph)) == 1


def test_radius_witness_distances(or_xyz):
    for x in (0, 1):
        for y in (0, 1):
            a, b = build_radius_witnesses(or_xyz, [x], [y])
            assert a.isolated == or_xyz.Z[1] and b.isolated == or_xyz.long_path[-1]
            assert flip_distance(or_xyz.graph, a, b).distance == 138


def test_radius_closed_form_mode():
    inst = build_radius_instance(OR_XYZ, ReductionParams(mode=CLOSED_FORM, c_constant=1))
    assert inst.ell == 2 * 43 and inst.L == 2 * (42 + 86 + 1)
    assert inst.core_diameter is None and inst.tail_diameter is None


def test_radius_rejects_wrong_prefix():
    with pytest.raises(ReductionError):
        build_radius_instance(OR_XY)


# --- set cover ----------------------------------------------------------------

SETCOVER_FROZEN = [
    (SetCoverInstance.of(1, [{1}]), 8, 11, {1}),
    (SetCoverInstance.of(2, [{1}, {2}, {1, 2}]), 14, 20, {3}),
    (SetCoverInstance.of(2, [{1}, {2}]), 14, 34, {1, 2}),
]


@pytest.mark.parametrize("sc, V, dist, cover", SETCOVER_FROZEN)
def test_setcover_frozen(sc, V, dist, cover):
    red = build_setcover_instance(sc)
    assert red.path_len == V == default_path_len(sc.n)
    assert red.graph.n == 1 + sc.t * V + 4 * sc.n
    assert bipartition(red.graph) is not None
    rep = flip_distance(red.graph, red.m_in, red.m_tar)
    assert rep.distance == dist
    got, bound = recover_cover(red, rep.witness)
    assert got == cover and bound == len(cover)


@st.composite
def setcover_instances(draw, max_n=3, max_t=4):
    n = draw(st.integers(1, max_n))
    sets = draw(st.lists(st.frozensets(st.integers(1, n), min_size=1), min_size=1,
                         max_size=max_t))
    covered = frozenset().union(*sets)
    sets += [frozenset({e}) for e in range(1, n + 1) if e not in covered]
    return SetCoverInstance.of(n, sets)


@settings(max_examples=40, deadline=None)
@given(setcover_instances())
def test_canonical_sequence_length_and_recovery(sc):
    red = build_setcover_instance(sc, ReductionParams(path_len_override=4))
    k, best = min_set_cover(sc)
    seq = canonical_sequence(red, best)
    assert len(seq) == red.distance_for(k)
    cover, bound = recover_cover(red, seq)
    assert cover == frozenset(best) and bound == k and cover_is_valid(sc, cover)


def test_canonical_sequence_rejects_non_cover():
    red = build_setcover_instance(SetCoverInstance.of(2, [{1}, {2}]))
    with pytest.raises(ReductionError):
        canonical_sequence(red, [1])
    with pytest.raises(ReductionError):
        canonical_sequence(red, [3])


def test_recover_rejects_foreign_sequence():
    red = build_setcover_instance(SetCoverInstance.of(1, [{1}]))
    with pytest.raises(ReductionError):
        recover_cover(red, FlipSequence(red.m_in, ()))
    with pytest.raises(IllegalFlip):
        recover_cover(red, FlipSequence(red.m_in, (red.set_paths[0][3],)))


def test_reduction_dir_round_trip(tmp_path):
    sc = SetCoverInstance.of(2, [{1}, {2}, {1, 2}])
    red = build_setcover_instance(sc)
    meta = {"kind": "setcover", "n": 2, "c_constant": "none"}
    rio.write_reduction_dir(tmp_path, rio.ReductionFiles(red.graph, red.m_in, red.m_tar,
                                                          red.roles, meta))
    files = rio.load_reduction_dir(tmp_path)
    assert files.graph == red.graph and files.roles == red.roles
    assert files.m_in == red.m_in and files.m_tar == red.m_tar
    assert files.meta == {"kind": "setcover", "n": "2", "c_constant": "none"}
    again = from_parts(files.graph, files.roles, files.m_in, files.m_tar)
    assert again.instance == sc
    assert again.set_paths == red.set_paths and again.element_cycles == red.element_cycles
