"""
Offline colorings with small stretch
====================================

Each algorithm colors the points so that the complete multipartite graph
between color classes is a spanner with a guaranteed stretch.
"""

import math

import numpy as np

from chromospan import (
    bound_for,
    color_cones_k,
    color_delaunay_4,
    color_ellipse_3,
    color_mst_2,
    stretch_factor,
)

pts = np.random.default_rng(7).random((60, 2))

# Two colors: alternate along the minimum spanning tree
col = color_mst_2(pts)
print(f"mst2      stretch={stretch_factor(pts, col).stretch:.4f}  bound={bound_for('mst2', 2):.4f}")

# Three colors: 3-color the triangle-free plane 2-ellipse graph
col, graph = color_ellipse_3(pts)
print(f"ellipse3  stretch={stretch_factor(pts, col).stretch:.4f}  bound=2.0000  ({len(graph.edges)} graph edges)")

# Four colors: 4-color the Delaunay triangulation
col = color_delaunay_4(pts)
print(f"delaunay4 stretch={stretch_factor(pts, col).stretch:.4f}  bound={math.sqrt(2):.4f}")

# k colors: sweep bottom-up, avoid the color of the nearest point in each lower cone
for k in (5, 7, 10):
    col = color_cones_k(pts, k)
    rep = stretch_factor(pts, col)
    print(f"cones k={k:<2} stretch={rep.stretch:.4f}  bound={bound_for('cones', k):.4f}  worst pair {rep.worst_pair} via {rep.witness}")
