"""Set cover as flip distance: the shortest flip sequence walks down the paths
of a minimum cover, and the cover is read back off the sequence."""

from oddflip import flip_distance
from oddflip.reductions import SetCoverInstance, build_setcover_instance, recover_cover
from oddflip.oracles import min_set_cover

sc = SetCoverInstance.of(3, [{1, 2}, {2, 3}, {3}, {1}])
red = build_setcover_instance(sc)
c_star, best = min_set_cover(sc)
print(f"{sc.t} sets over {sc.n} elements, minimum cover {best} of size {c_star}")
print(f"graph: {red.graph.n} vertices, set paths of length {red.path_len}")

rep = flip_distance(red.graph, red.m_in, red.m_tar)
print(f"flip distance {rep.distance} = {c_star} * {red.path_len} + 3 * {sc.n}")
cover, bound = recover_cover(red, rep.witness)
print(f"recovered cover {sorted(cover)}, size bound {bound}")
