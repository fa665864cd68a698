"""Offline colorings whose complete k-partite graphs are bounded-stretch spanners.

=====================  ===  =============================
function               k    stretch bound
=====================  ===  =============================
``color_mst_2``        2    3
``color_ellipse_3``    3    2
``color_delaunay_4``   4    sqrt(2)
``color_cones_k``      k    1 + 2 sin(pi / (2k - 2))
=====================  ===  =============================
"""
from __future__ import annotations

import math
import sys
from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

from .coloring import Coloring
from .errors import ColoringSearchFailed
from .geom import as_points, check_distinct, cone_indices, distance_matrix
from .proximity import delaunay, emst

Edge = Tuple[int, int]

# relative slack on the closed 2-ellipse test; keeps exact ties on the boundary
_ELLIPSE_RTOL = 1e-12


@dataclass(frozen=True)
class EllipseGraph:
    points: np.ndarray
    edges: Tuple[Edge, ...]


def bound_for(algorithm: str, k: int) -> float:
    """Guaranteed stretch of ``algorithm`` ('mst2', 'ellipse3', 'delaunay4', 'cones', 'online')."""
    if algorithm == "mst2":
        return 3.0
    if algorithm == "ellipse3":
        return 2.0
    if algorithm == "delaunay4":
        return math.sqrt(2.0)
    if algorithm == "cones":
        return 1.0 + 2.0 * math.sin(math.pi / (2 * k - 2))
    if algorithm == "online":
        return 1.0 + 2.0 * math.sin(math.pi / k)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def proper_color_exact(n: int, edges: Iterable[Edge], k: int) -> Optional[Coloring]:
    """Proper k-coloring of a simple graph by DSATUR-ordered backtracking, or None.

    Only one previously unused color is tried at each branch, which removes
    color-permutation symmetry without losing completeness.  A branch is cut as
    soon as an uncolored vertex has every color blocked by its neighbors.
    """
    adj: List[set] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            return None
        adj[u].add(v)
        adj[v].add(u)
    if n == 0:
        return Coloring(k=max(k, 1), assignment=())
    if k < 1:
        return None

    colors = [0] * n
    # forbidden[v][c] counts colored neighbors of v with color c
    forbidden = [[0] * (k + 1) for _ in range(n)]
    saturation = [0] * n
    degree = [len(a) for a in adj]

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colors[v] == 0:
                cand = (saturation[v], degree[v], -v)
                if key is None or cand > key:
                    best, key = v, cand
        return best

    def assign(v: int, c: int) -> bool:
        # returns False when some uncolored neighbor is left with no color
        colors[v] = c
        alive = True
        for w in adj[v]:
            if forbidden[w][c] == 0:
                saturation[w] += 1
                if colors[w] == 0 and saturation[w] == k:
                    alive = False
            forbidden[w][c] += 1
        return alive

    def unassign(v: int, c: int):
        colors[v] = 0
        for w in adj[v]:
            forbidden[w][c] -= 1
            if forbidden[w][c] == 0:
                saturation[w] -= 1

    def search(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        v = pick()
        for c in range(1, min(used + 1, k) + 1):
            if forbidden[v][c]:
                continue
            if assign(v, c) and search(remaining - 1, max(used, c)):
                return True
            unassign(v, c)
        return False

    limit = sys.getrecursionlimit()
    if n + 100 > limit:
        sys.setrecursionlimit(n + 100)
    try:
        found = search(n, 0)
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        return None
    return Coloring(k=k, assignment=tuple(colors))


def color_mst_2(points) -> Coloring:
    """Two-color the Euclidean minimum spanning tree by BFS parity from point 0."""
    pts = as_points(points)
    n = len(pts)
    tree = emst(pts)
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, v in sorted(tree.edges):
        adj[u].append(v)
        adj[v].append(u)
    colors = [0] * n
    if n:
        colors[0] = 1
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colors[w] == 0:
                    colors[w] = 3 - colors[u]
                    queue.append(w)
    return Coloring(k=2, assignment=tuple(colors))


def ellipse_graph(points) -> EllipseGraph:
    """Graph built by scanning all pairs by length, skipping any pair whose closed
    2-ellipse already holds both endpoints of an accepted edge."""
    pts = as_points(points)
    n = len(pts)
    check_distinct(pts)
    if n < 2:
        return EllipseGraph(points=pts, edges=())
    D = distance_matrix(pts)
    iu, ju = np.triu_indices(n, 1)
    order = np.lexsort((ju, iu, D[iu, ju]))
    ea = np.empty(3 * n, dtype=np.int64)
    eb = np.empty(3 * n, dtype=np.int64)
    m = 0
    edges: List[Edge] = []
    for idx in order:
        i, j = int(iu[idx]), int(ju[idx])
        if m:
            limit = 2.0 * D[i, j] * (1.0 + _ELLIPSE_RTOL)
            inside = (D[i] + D[j]) <= limit
            if np.any(inside[ea[:m]] & inside[eb[:m]]):
                continue
        if m == len(ea):
            ea = np.resize(ea, 2 * m)
            eb = np.resize(eb, 2 * m)
        ea[m], eb[m] = i, j
        m += 1
        edges.append((i, j))
    return EllipseGraph(points=pts, edges=tuple(edges))


def color_ellipse_3(points) -> Tuple[Coloring, EllipseGraph]:
    """Three-coloring of the ellipse graph; returns the coloring and the graph."""
    g = ellipse_graph(points)
    col = proper_color_exact(len(g.points), g.edges, 3)
    if col is None:
        raise ColoringSearchFailed("ellipse graph admits no 3-coloring")
    return col, g


def _kempe_swap(adj, colors, start: int, a: int, b: int) -> None:
    chain = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in chain and colors[w] in (a, b):
                chain.add(w)
                stack.append(w)
    for u in chain:
        colors[u] = b if colors[u] == a else a


def kempe_four_color(n: int, edges: Iterable[Edge]) -> Optional[Coloring]:
    """Four-coloring heuristic for planar graphs; None if it gets stuck.

    Vertices are colored in reverse smallest-last order, so each has at most five
    colored neighbors on arrival.  When all four colors are blocked, a Kempe chain
    interchange is tried to free one.
    """
    adj: List[set] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    deg = [len(a) for a in adj]
    removed = [False] * n
    order: List[int] = []
    for _ in range(n):
        v = min((d, i) for i, d in enumerate(deg) if not removed[i])[1]
        removed[v] = True
        order.append(v)
        for w in adj[v]:
            if not removed[w]:
                deg[w] -= 1

    colors = [0] * n
    for v in reversed(order):
        taken = {colors[w] for w in adj[v]}
        free = [c for c in range(1, 5) if c not in taken]
        if free:
            colors[v] = free[0]
            continue
        done = False
        for a in range(1, 5):
            for b in range(a + 1, 5):
                for u in sorted(w for w in adj[v] if colors[w] == a):
                    trial = colors[:]
                    _kempe_swap(adj, trial, u, a, b)
                    if all(trial[w] != a for w in adj[v]):
                        colors = trial
                        colors[v] = a
                        done = True
                        break
                if done:
                    break
            if done:
                break
        if not done:
            return None
    return Coloring(k=4, assignment=tuple(colors))


def color_delaunay_4(points) -> Coloring:
    """Proper four-coloring of the Delaunay triangulation.

    The Kempe-chain heuristic answers almost every input; exact search backs it up.
    """
    tri = delaunay(points)
    edges = sorted(tri.edges)
    col = kempe_four_color(len(tri.points), edges)
    if col is None:
        col = proper_color_exact(len(tri.points), edges, 4)
    if col is None:
        raise ColoringSearchFailed("Delaunay triangulation admits no 4-coloring")
    return col


def cones_order(points: np.ndarray) -> np.ndarray:
    """Processing order: y ascending, then x, then input index."""
    n = len(points)
    return np.lexsort((np.arange(n), points[:, 0], points[:, 1]))


def cone_neighbors(points, k: int) -> List[List[int]]:
    """For each point, the nearest earlier-processed point in each downward cone."""
    pts = as_points(points)
    n = len(pts)
    order = cones_order(pts)
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)
    result: List[List[int]] = [[] for _ in range(n)]
    for pos in range(1, n):
        p = order[pos]
        prior = order[:pos]
        cones = cone_indices(pts[p], pts[prior], k)
        diff = pts[prior] - pts[p]
        d = np.hypot(diff[:, 0], diff[:, 1])
        # per cone: smallest distance, ties to the earliest processed point
        sel = np.lexsort((rank[prior], d, cones))
        cs = cones[sel]
        first = np.ones(len(sel), dtype=bool)
        first[1:] = cs[1:] != cs[:-1]
        first &= cs >= 0
        result[p] = [int(x) for x in prior[sel[first]]]
    return result


def color_cones_k(points, k: int) -> Coloring:
    """Sweep upward; each point takes the least color unused by its cone neighbors."""
    if k < 2:
        raise ValueError("k must be at least 2")
    pts = as_points(points)
    check_distinct(pts)
    n = len(pts)
    neighbors = cone_neighbors(pts, k)
    colors = [0] * n
    for p in cones_order(pts):
        taken = {colors[r] for r in neighbors[p]}
        c = 1
        while c in taken:
            c += 1
        colors[p] = c
    return Coloring(k=k, assignment=tuple(colors))
