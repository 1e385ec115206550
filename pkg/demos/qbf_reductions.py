"""Forall-exists formulas as flip-graph diameters, and an exists-forall-exists
formula as a flip-graph radius, checked against brute-force QBF evaluation."""

from oddflip import flip_distance
from oddflip.reductions import (QuantifiedFormula, build_diameter_instance,
                                build_radius_instance, build_radius_witnesses,
                                build_witness_pair)
from oddflip.oracles import solve_exists_forall_exists, solve_forall_exists

for clauses in ([(1, 2)], [(1,), (2,)]):
    phi = QuantifiedFormula.forall_exists(1, 1, clauses)
    inst = build_diameter_instance(phi)
    print(f"forall x exists y {clauses}: {inst.graph.n} vertices, ell {inst.ell}, "
          f"threshold {inst.threshold}, oracle says {solve_forall_exists(phi).satisfied}")
    for x in (0, 1):
        d = flip_distance(inst.graph, *build_witness_pair(inst, [x])).distance
        print(f"  x={x}: witness distance {d}", "<=" if d <= inst.threshold else ">",
              "threshold")

psi = QuantifiedFormula.exists_forall_exists(1, 1, 1, [(1, 2, 3)])
inst = build_radius_instance(psi)
print(f"exists x forall y exists z (x or y or z): {inst.graph.n} vertices, "
      f"ell {inst.ell}, L {inst.L}, threshold {inst.threshold}, "
      f"oracle says {solve_exists_forall_exists(psi).satisfied}")
for x in (0, 1):
    for y in (0, 1):
        d = flip_distance(inst.graph, *build_radius_witnesses(inst, [x], [y])).distance
        print(f"  x={x} y={y}: witness distance {d}")
