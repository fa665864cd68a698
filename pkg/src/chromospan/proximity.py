"""Delaunay triangulation and Euclidean minimum spanning tree."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Tuple

import numpy as np

from .errors import AllCollinear, TooFewPoints
from .geom import as_points, check_distinct, distance_matrix, incircle_sign, orient_sign

Edge = Tuple[int, int]

GHOST = -1


@dataclass(frozen=True)
class Triangulation:
    points: np.ndarray
    edges: FrozenSet[Edge]
    triangles: FrozenSet[Tuple[int, int, int]]


@dataclass(frozen=True)
class SpanningTree:
    points: np.ndarray
    edges: FrozenSet[Edge]

    @property
    def weight(self) -> float:
        return float(sum(np.hypot(*(self.points[i] - self.points[j])) for i, j in self.edges))


def _canon(tri):
    # rotation starting at the smallest label; GHOST (-1) always leads
    a, b, c = tri
    if a <= b and a <= c:
        return (a, b, c)
    if b <= a and b <= c:
        return (b, c, a)
    return (c, a, b)


class _Builder:
    """Bowyer-Watson insertion over a triangulation closed by ghost triangles.

    A ghost triangle ``(u, v, GHOST)`` sits across hull edge ``u -> v`` with the
    exterior on its left.  A point conflicts with a real triangle when it lies
    strictly inside the circumcircle, and with a ghost when it lies strictly left
    of its edge or strictly inside the edge segment.  Cocircular points never
    conflict, so ties are settled by insertion (index) order.
    """

    def __init__(self, pts: np.ndarray):
        self.pts = [tuple(p) for p in pts.tolist()]
        self.tris: set = set()
        self.apex: dict = {}

    def add(self, tri):
        a, b, c = tri
        self.tris.add(_canon(tri))
        self.apex[(a, b)] = c
        self.apex[(b, c)] = a
        self.apex[(c, a)] = b

    def remove(self, tri):
        a, b, c = tri
        self.tris.discard(_canon(tri))
        for e in ((a, b), (b, c), (c, a)):
            self.apex.pop(e, None)

    def conflicts(self, tri, p) -> bool:
        pts = self.pts
        if GHOST in tri:
            # rotate so the ghost vertex is last
            i = tri.index(GHOST)
            u, v = tri[(i + 1) % 3], tri[(i + 2) % 3]
            o = orient_sign(pts[u], pts[v], p)
            if o > 0:
                return True
            if o < 0:
                return False
            (ux, uy), (vx, vy) = pts[u], pts[v]
            return (ux - p[0]) * (vx - p[0]) + (uy - p[1]) * (vy - p[1]) < 0
        a, b, c = tri
        return incircle_sign(pts[a], pts[b], pts[c], p) > 0

    def insert(self, idx: int):
        p = self.pts[idx]
        seed = next((t for t in self.tris if self.conflicts(t, p)), None)
        if seed is None:
            raise RuntimeError(f"point {idx} conflicts with no triangle")
        cavity = {seed}
        stack = [seed]
        boundary = []
        while stack:
            tri = stack.pop()
            a, b, c = tri
            for u, v in ((a, b), (b, c), (c, a)):
                nb = _canon((v, u, self.apex[(v, u)]))
                if nb in cavity:
                    continue
                if self.conflicts(nb, p):
                    cavity.add(nb)
                    stack.append(nb)
                else:
                    boundary.append((u, v))
        for tri in cavity:
            self.remove(tri)
        for u, v in boundary:
            self.add((u, v, idx))


def delaunay(points) -> Triangulation:
    """Delaunay triangulation by incremental insertion in index order.

    Raises ``TooFewPoints`` below three points, ``DuplicatePoints`` on repeats and
    ``AllCollinear`` when no triangle exists.
    """
    pts = as_points(points)
    n = len(pts)
    if n < 3:
        raise TooFewPoints("delaunay needs at least 3 points")
    check_distinct(pts)
    plist = [tuple(p) for p in pts.tolist()]
    third = next((j for j in range(2, n) if orient_sign(plist[0], plist[1], plist[j]) != 0), None)
    if third is None:
        raise AllCollinear("all input points are collinear")

    b = _Builder(pts)
    a0, a1, a2 = 0, 1, third
    if orient_sign(plist[a0], plist[a1], plist[a2]) < 0:
        a1, a2 = a2, a1
    b.add((a0, a1, a2))
    b.add((a1, a0, GHOST))
    b.add((a2, a1, GHOST))
    b.add((a0, a2, GHOST))
    for i in range(2, n):
        if i != third:
            b.insert(i)

    triangles = frozenset(t for t in b.tris if GHOST not in t)
    edges = set()
    for t in triangles:
        for u, v in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            edges.add((min(u, v), max(u, v)))
    return Triangulation(points=pts, edges=frozenset(edges), triangles=triangles)


def emst(points) -> SpanningTree:
    """Euclidean minimum spanning tree by Prim's algorithm on the complete graph.

    Edges are compared by ``(length, min index, max index)``, a strict total order,
    so the returned tree is unique.
    """
    pts = as_points(points)
    n = len(pts)
    check_distinct(pts)
    if n <= 1:
        return SpanningTree(points=pts, edges=frozenset())
    D = distance_matrix(pts)
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    best = D[0].copy()
    src = np.zeros(n, dtype=np.int64)
    idx = np.arange(n)
    edges = set()
    for _ in range(n - 1):
        cand = np.flatnonzero(~in_tree)
        lo = np.minimum(src[cand], cand)
        hi = np.maximum(src[cand], cand)
        order = np.lexsort((hi, lo, best[cand]))
        v = int(cand[order[0]])
        u = int(src[v])
        edges.add((min(u, v), max(u, v)))
        in_tree[v] = True
        row = D[v]
        # improve on strictly shorter, or equal length with a smaller index pair
        new_lo = np.minimum(v, idx)
        new_hi = np.maximum(v, idx)
        old_lo = np.minimum(src, idx)
        old_hi = np.maximum(src, idx)
        better = (row < best) | (
            (row == best) & ((new_lo < old_lo) | ((new_lo == old_lo) & (new_hi < old_hi)))
        )
        better &= ~in_tree
        best = np.where(better, row, best)
        src = np.where(better, v, src)
    return SpanningTree(points=pts, edges=frozenset(edges))
