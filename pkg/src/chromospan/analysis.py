"""Verification oracles and the bichromatic greedy sparsifier.

Two independent routes compute the stretch of a coloring:

* :func:`stretch_factor` uses the two-hop formula.  In the complete k-partite
  graph a same-colored pair ``p, q`` is best served by one intermediate ``r`` of
  another color, because any longer path can be shortcut after its first hop.
* :func:`dijkstra_stretch` runs shortest paths on an explicit edge set.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import dijkstra

from .coloring import Coloring, as_coloring
from .errors import BudgetExceeded
from .geom import EPS_GEO, as_points, distance_matrix, orient_signs

Edge = Tuple[int, int]

INF = math.inf

# rows of a color class processed at once by the two-hop min-plus product
_ROW_BLOCK = 64


@dataclass(frozen=True)
class StretchReport:
    stretch: float
    worst_pair: Optional[Edge] = None
    witness: Optional[int] = None

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.stretch)


@dataclass(frozen=True)
class SparseSpanner:
    points: np.ndarray
    coloring: Coloring
    edges: Tuple[Edge, ...]
    epsilon: float


def _better(cand, best) -> bool:
    # larger ratio wins; equal ratios go to the lexicographically smaller pair
    if best is None:
        return True
    if cand[0] != best[0]:
        return cand[0] > best[0]
    return cand[1] < best[1]


def stretch_factor(points, coloring) -> StretchReport:
    """Stretch factor of the complete k-partite graph induced by ``coloring``."""
    pts = as_points(points)
    colors = as_coloring(coloring).as_array()
    n = len(pts)
    if len(colors) != n:
        raise ValueError("coloring length does not match point count")
    if n < 2:
        return StretchReport(1.0)
    D = distance_matrix(pts)
    best = None  # (ratio, (p, q), witness)
    for c in np.unique(colors):
        cls = np.flatnonzero(colors == c)
        m = len(cls)
        if m < 2:
            continue
        others = np.flatnonzero(colors != c)
        if len(others) == 0:
            cand = (INF, (int(cls[0]), int(cls[1])), None)
            if _better(cand, best):
                best = cand
            continue
        A = D[np.ix_(cls, others)]
        for lo in range(0, m - 1, _ROW_BLOCK):
            hi = min(lo + _ROW_BLOCK, m)
            S = A[lo:hi, None, :] + A[None, :, :]
            arg = S.argmin(axis=2)
            smin = np.take_along_axis(S, arg[..., None], axis=2)[..., 0]
            with np.errstate(divide="ignore", invalid="ignore"):
                ratio = smin / D[np.ix_(cls[lo:hi], cls)]
            rows, cols = np.indices(ratio.shape)
            ratio[cols <= rows + lo] = -INF
            flat = int(np.argmax(ratio))
            a, b = divmod(flat, m)
            val = float(ratio[a, b])
            if val == -INF:
                continue
            cand = (val, (int(cls[lo + a]), int(cls[b])), int(others[arg[a, b]]))
            if _better(cand, best):
                best = cand
    if best is None:
        return StretchReport(1.0)
    return StretchReport(stretch=max(best[0], 1.0), worst_pair=best[1], witness=best[2])


def bichromatic_edges(coloring) -> List[Edge]:
    colors = as_coloring(coloring).assignment
    return [(i, j) for i, j in combinations(range(len(colors)), 2) if colors[i] != colors[j]]


def dijkstra_stretch(points, edges: Iterable[Edge]) -> StretchReport:
    """Maximum over point pairs of graph distance divided by Euclidean distance."""
    pts = as_points(points)
    n = len(pts)
    if n < 2:
        return StretchReport(1.0)
    e = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
    if len(e) == 0:
        return StretchReport(INF, worst_pair=(0, 1))
    D = distance_matrix(pts)
    w = D[e[:, 0], e[:, 1]]
    graph = coo_matrix((w, (e[:, 0], e[:, 1])), shape=(n, n)).tocsr()
    G = dijkstra(graph, directed=False)
    iu, ju = np.triu_indices(n, 1)
    ratio = G[iu, ju] / D[iu, ju]
    flat = int(np.argmax(ratio))
    return StretchReport(
        stretch=max(float(ratio[flat]), 1.0), worst_pair=(int(iu[flat]), int(ju[flat]))
    )


def has_ellipse_property(points, coloring, t: float) -> bool:
    """True iff every same-colored pair has a differently colored ``r`` with
    ``|pr| + |rq| <= t |pq|`` (with ``EPS_GEO`` slack on the ratio)."""
    pts = as_points(points)
    colors = as_coloring(coloring).as_array()
    n = len(pts)
    D = distance_matrix(pts)
    for p in range(n):
        for q in range(p + 1, n):
            if colors[p] != colors[q]:
                continue
            mask = colors != colors[p]
            if not mask.any():
                return False
            ratio = (D[p, mask] + D[mask, q]) / D[p, q]
            if ratio.min() > t + EPS_GEO:
                return False
    return True


def is_plane_graph(points, edges: Iterable[Edge]) -> bool:
    """True iff no two edges cross properly and no edge runs through another point."""
    pts = as_points(points)
    e = np.asarray(sorted({(min(u, v), max(u, v)) for u, v in edges}), dtype=np.int64).reshape(-1, 2)
    m, n = len(e), len(pts)
    if m == 0:
        return True

    # a point in the relative interior of an edge
    ei = np.repeat(np.arange(m), n)
    vi = np.tile(np.arange(n), m)
    keep = (vi != e[ei, 0]) & (vi != e[ei, 1])
    ei, vi = ei[keep], vi[keep]
    a, b, v = pts[e[ei, 0]], pts[e[ei, 1]], pts[vi]
    col = orient_signs(a, b, v) == 0
    if col.any():
        a, b, v = a[col], b[col], v[col]
        between = np.einsum("ij,ij->i", a - v, b - v) < 0
        if between.any():
            return False

    i, j = np.triu_indices(m, 1)
    disjoint = (
        (e[i, 0] != e[j, 0]) & (e[i, 0] != e[j, 1]) & (e[i, 1] != e[j, 0]) & (e[i, 1] != e[j, 1])
    )
    i, j = i[disjoint], j[disjoint]
    if len(i) == 0:
        return True
    p1, p2 = pts[e[i, 0]], pts[e[i, 1]]
    q1, q2 = pts[e[j, 0]], pts[e[j, 1]]
    # bounding-box prefilter before the exact tests
    overlap = (
        (np.maximum(p1[:, 0], p2[:, 0]) >= np.minimum(q1[:, 0], q2[:, 0]))
        & (np.maximum(q1[:, 0], q2[:, 0]) >= np.minimum(p1[:, 0], p2[:, 0]))
        & (np.maximum(p1[:, 1], p2[:, 1]) >= np.minimum(q1[:, 1], q2[:, 1]))
        & (np.maximum(q1[:, 1], q2[:, 1]) >= np.minimum(p1[:, 1], p2[:, 1]))
    )
    p1, p2, q1, q2 = p1[overlap], p2[overlap], q1[overlap], q2[overlap]
    if len(p1) == 0:
        return True
    o1 = orient_signs(p1, p2, q1).astype(np.int64)
    o2 = orient_signs(p1, p2, q2).astype(np.int64)
    o3 = orient_signs(q1, q2, p1).astype(np.int64)
    o4 = orient_signs(q1, q2, p2).astype(np.int64)
    return not np.any((o1 * o2 < 0) & (o3 * o4 < 0))


def is_triangle_free(edges: Iterable[Edge]) -> bool:
    adj: dict = {}
    pairs = [(u, v) for u, v in edges if u != v]
    for u, v in pairs:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return not any(adj[u] & adj[v] for u, v in pairs)


def optimal_coloring_bruteforce(
    points, k: int, budget: float = 1e8, chunk: int = 1 << 15
) -> Tuple[Coloring, float]:
    """Minimum stretch over all k-colorings, by exhaustive enumeration.

    The first point is fixed to color 1, leaving ``k ** (n - 1)`` colorings.  The
    witness is the lexicographically smallest optimal coloring.
    """
    pts = as_points(points)
    n = len(pts)
    if n == 0:
        return Coloring(k=k, assignment=()), 1.0
    total = k ** (n - 1)
    if total > budget:
        raise BudgetExceeded(f"{k}^{n - 1} = {total} colorings exceed budget {budget:g}")
    D = distance_matrix(pts)
    with np.errstate(divide="ignore", invalid="ignore"):
        T = (D[:, None, :] + D[None, :, :].transpose(0, 2, 1)) / D[:, :, None]
    # T[p, q, r] = (|pr| + |rq|) / |pq|
    pairs = list(combinations(range(n), 2))
    powers = k ** np.arange(n - 2, -1, -1, dtype=np.int64)

    best_val, best_code = INF, -1
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        C = np.empty((len(codes), n), dtype=np.int8)
        C[:, 0] = 0
        if n > 1:
            C[:, 1:] = (codes[:, None] // powers[None, :]) % k
        stretch = np.ones(len(codes))
        for p, q in pairs:
            same = C[:, p] == C[:, q]
            if not same.any():
                continue
            sub = C[same]
            allowed = sub != sub[:, p : p + 1]
            vals = np.where(allowed, T[p, q][None, :], INF).min(axis=1)
            stretch[same] = np.maximum(stretch[same], vals)
        at = int(np.argmin(stretch))
        if stretch[at] < best_val:
            best_val, best_code = float(stretch[at]), int(codes[at])
    digits = [0] + [int(best_code // int(pw) % k) for pw in powers] if n > 1 else [0]
    return Coloring(k=k, assignment=tuple(d + 1 for d in digits)), best_val


def _bounded_dijkstra(adj: List[List[Tuple[int, float]]], src: int, limit: float) -> dict:
    """Distances from ``src`` to every vertex reachable within ``limit``."""
    done: dict = {}
    heap = [(0.0, src)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done[u] = d
        for v, w in adj[u]:
            nd = d + w
            if v not in done and nd <= limit:
                heapq.heappush(heap, (nd, v))
    return done


def sparsify_greedy(points, coloring, epsilon: float) -> SparseSpanner:
    """Path-greedy (1 + epsilon)-spanner of the complete k-partite graph.

    Bichromatic pairs are scanned by ``(length, i, j)``; a pair becomes an edge only
    when the current graph distance exceeds ``(1 + epsilon)`` times its length.
    Graph distances found by earlier searches are cached as upper bounds, so a
    shortest-path search runs only when the cache cannot already certify a pair.
    This returns exactly the edges of the plain path-greedy rule.
    """
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    pts = as_points(points)
    col = as_coloring(coloring)
    colors = col.as_array()
    n = len(pts)
    if n < 2:
        return SparseSpanner(points=pts, coloring=col, edges=(), epsilon=epsilon)
    D = distance_matrix(pts)
    t = 1.0 + epsilon
    iu, ju = np.triu_indices(n, 1)
    bi = colors[iu] != colors[ju]
    iu, ju = iu[bi], ju[bi]
    order = np.lexsort((ju, iu, D[iu, ju]))
    known = np.full((n, n), INF)
    np.fill_diagonal(known, 0.0)
    adj: List[List[Tuple[int, float]]] = [[] for _ in range(n)]
    edges: List[Edge] = []
    for idx in order:
        i, j = int(iu[idx]), int(ju[idx])
        limit = t * D[i, j]
        if known[i, j] <= limit:
            continue
        reach = _bounded_dijkstra(adj, i, limit)
        for v, d in reach.items():
            if d < known[i, v]:
                known[i, v] = known[v, i] = d
        if known[i, j] <= limit:
            continue
        adj[i].append((j, D[i, j]))
        adj[j].append((i, D[i, j]))
        edges.append((i, j))
        known[i, j] = known[j, i] = D[i, j]
    return SparseSpanner(points=pts, coloring=col, edges=tuple(edges), epsilon=epsilon)
