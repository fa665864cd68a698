"""
Sparse bichromatic spanners
===========================

The complete multipartite graph has quadratically many edges.  The greedy
sparsifier keeps only bichromatic edges and loses at most a 1 + eps factor.
"""

import numpy as np

from chromospan import color_delaunay_4, dijkstra_stretch, sparsify_greedy, stretch_factor
from chromospan.analysis import bichromatic_edges

for n in (100, 200):
    pts = np.random.default_rng(n).random((n, 2))
    col = color_delaunay_4(pts)
    full = len(bichromatic_edges(col))
    sp = sparsify_greedy(pts, col, epsilon=0.5)
    s_full = stretch_factor(pts, col).stretch
    s_sparse = dijkstra_stretch(pts, sp.edges).stretch
    print(f"n={n}: {full} -> {len(sp.edges)} edges, stretch {s_full:.4f} -> {s_sparse:.4f} (limit {1.5 * s_full:.4f})")
