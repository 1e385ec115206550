"""Flips, flip distance and connectivity on a few small graphs."""

from oddflip import (OddMatching, apply_flip, build_flip_graph, charging_lower_bound,
                     cycle_graph, decompose_union, diameter, flip_distance,
                     is_flip_connected, radius_center)
from oddflip.graph import Graph

g = cycle_graph(5)
m = OddMatching.from_edges(5, [(1, 2), (3, 4)])
print("C5 start:", m)
print("flip to vertex 1:", apply_flip(g, m, 1))

# a hexagon hung off an anchor: switching the whole cycle costs k + 1 = 4 flips
hexagon = Graph.from_edges(7, [(0, 1)] + [(i, i % 6 + 1) for i in range(1, 7)])
a = OddMatching.from_edges(7, [(1, 2), (3, 4), (5, 6)])
b = OddMatching.from_edges(7, [(2, 3), (4, 5), (6, 1)])
rep = flip_distance(hexagon, a, b)
print("hexagon switch:", rep.distance, "flips via", [w for w in rep.witness.steps])
print("charging lower bound:", charging_lower_bound(decompose_union(a, b)))
print("hexagon flip graph: diameter", diameter(hexagon),
      "radius", radius_center(hexagon)[0])

# a connected host whose flip graph still falls apart
split = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 6), (2, 3), (4, 6), (5, 6)])
fg = build_flip_graph(split)
print("split graph:", len(fg), "odd matchings in", fg.component_count(), "components")
print("polynomial test:", is_flip_connected(split))
