"""
Exact predicates, Delaunay triangulation and the minimum spanning tree
======================================================================

"""

import numpy as np

from chromospan import geom
from chromospan.proximity import delaunay, emst

# Nearly collinear points: the naive cross product rounds, the exact predicate does not
p, q, r = (0.5, 0.5), (12.0, 12.0), (24.0, 24.0)
print("orientation(p, q, r):", geom.orientation(p, q, r).name)
r2 = (24.0, np.nextafter(24.0, 25.0))
print("one ulp higher:      ", geom.orientation(p, q, r2).name)

# Incircle test against the unit circle through three points
print("center inside circle:", geom.in_circle((1, 0), (0, 1), (-1, 0), (0, 0)).name)

# Delaunay triangulation of 30 random points
pts = np.random.default_rng(1).random((30, 2))
tri = delaunay(pts)
print(f"{len(tri.triangles)} triangles, {len(tri.edges)} edges")

# The EMST is a subgraph of the Delaunay triangulation
tree = emst(pts)
print("EMST weight:", round(tree.weight, 6))
print("EMST inside Delaunay:", tree.edges <= tri.edges)
