"""Geometric spanners with small chromatic number.

Color a planar point set with ``k`` colors so that the complete k-partite graph
between color classes is a spanner with small stretch, offline or online, and
check every guarantee with independent oracles.
"""
from .analysis import (
    SparseSpanner,
    StretchReport,
    bichromatic_edges,
    dijkstra_stretch,
    has_ellipse_property,
    is_plane_graph,
    is_triangle_free,
    optimal_coloring_bruteforce,
    sparsify_greedy,
    stretch_factor,
)
from .coloring import Coloring
from .constructions import (
    LowerBoundInstance,
    gen_lb_k2,
    gen_lb_k3,
    gen_lb_k4,
    gen_lb_kgon,
    gen_online_lb,
    k3_online_probe,
    run_adversary,
)
from .experiments import ExperimentConfig, ResultTable, run_experiment
from .geom import (
    EPS_GEO,
    CircleSide,
    Orientation,
    angle_at,
    cone_index,
    detour,
    in_circle,
    orientation,
)
from .offline import (
    EllipseGraph,
    bound_for,
    color_cones_k,
    color_delaunay_4,
    color_ellipse_3,
    color_mst_2,
    proper_color_exact,
)
from .online import OnlineColorer, color_online
from .pointio import read_points, write_points
from .proximity import SpanningTree, Triangulation, delaunay, emst

__version__ = "0.1.0"
