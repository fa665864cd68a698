"""Geometric primitives: robust predicates, distances, detours, angles, cones.

Orientation and in-circle tests are exact: a floating-point evaluation is
accepted when it clears Shewchuk's static error bound, otherwise the
determinant is re-evaluated in rational arithmetic on the exact binary values
of the inputs.  Metric quantities are plain floating point; comparisons against
stretch bounds use the slack ``EPS_GEO``.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import (
    CoincidentEndpoints,
    CollinearBase,
    DegenerateRay,
    DuplicatePoints,
)

Point = Tuple[float, float]

EPS_GEO = 1e-9

_EPS = 2.0 ** -53
_CCW_ERRBOUND_A = (3.0 + 16.0 * _EPS) * _EPS
_ICC_ERRBOUND_A = (10.0 + 96.0 * _EPS) * _EPS


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class CircleSide(enum.IntEnum):
    OUTSIDE = -1
    ON = 0
    INSIDE = 1


def as_points(points) -> np.ndarray:
    """Coerce ``points`` to a finite ``(n, 2)`` float64 array."""
    arr = np.asarray(points, dtype=np.float64)
    if arr.size == 0:
        return arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("point coordinates must be finite")
    return arr


def check_distinct(points: np.ndarray) -> None:
    if len(points) < 2:
        return
    uniq = np.unique(points, axis=0)
    if len(uniq) != len(points):
        raise DuplicatePoints("point set contains duplicate points")


def distance_matrix(points: np.ndarray) -> np.ndarray:
    diff = points[:, None, :] - points[None, :, :]
    return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _orient_exact(p: Point, q: Point, r: Point) -> int:
    px, py = Fraction(p[0]), Fraction(p[1])
    det = (Fraction(q[0]) - px) * (Fraction(r[1]) - py) - (Fraction(q[1]) - py) * (
        Fraction(r[0]) - px
    )
    return _sign(det)


def orient_sign(p: Point, q: Point, r: Point) -> int:
    """Sign (+1, 0, -1) of twice the signed area of triangle ``pqr``."""
    detleft = (p[0] - r[0]) * (q[1] - r[1])
    detright = (p[1] - r[1]) * (q[0] - r[0])
    det = detleft - detright
    errbound = _CCW_ERRBOUND_A * (abs(detleft) + abs(detright))
    if det > errbound:
        return 1
    if -det > errbound:
        return -1
    return _orient_exact(p, q, r)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    return Orientation(orient_sign(p, q, r))


def orient_signs(p: np.ndarray, q: np.ndarray, r: np.ndarray) -> np.ndarray:
    """Vectorised :func:`orient_sign` over row-aligned ``(m, 2)`` arrays."""
    detleft = (p[:, 0] - r[:, 0]) * (q[:, 1] - r[:, 1])
    detright = (p[:, 1] - r[:, 1]) * (q[:, 0] - r[:, 0])
    det = detleft - detright
    errbound = _CCW_ERRBOUND_A * (np.abs(detleft) + np.abs(detright))
    out = np.where(det > errbound, 1, np.where(-det > errbound, -1, 0)).astype(np.int8)
    for i in np.flatnonzero(np.abs(det) <= errbound):
        out[i] = _orient_exact(tuple(p[i]), tuple(q[i]), tuple(r[i]))
    return out


def _incircle_exact(a: Point, b: Point, c: Point, d: Point) -> int:
    dx, dy = Fraction(d[0]), Fraction(d[1])
    rows = []
    for pt in (a, b, c):
        x = Fraction(pt[0]) - dx
        y = Fraction(pt[1]) - dy
        rows.append((x, y, x * x + y * y))
    (ax, ay, al), (bx, by, bl), (cx, cy, cl) = rows
    det = (
        al * (bx * cy - cx * by)
        + bl * (cx * ay - ax * cy)
        + cl * (ax * by - bx * ay)
    )
    return _sign(det)


def incircle_sign(a: Point, b: Point, c: Point, d: Point) -> int:
    """Positive iff ``d`` lies inside the circle through counter-clockwise ``a, b, c``."""
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    bdxcdy, cdxbdy = bdx * cdy, cdx * bdy
    cdxady, adxcdy = cdx * ady, adx * cdy
    adxbdy, bdxady = adx * bdy, bdx * ady
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (
        alift * (bdxcdy - cdxbdy)
        + blift * (cdxady - adxcdy)
        + clift * (adxbdy - bdxady)
    )
    permanent = (
        (abs(bdxcdy) + abs(cdxbdy)) * alift
        + (abs(cdxady) + abs(adxcdy)) * blift
        + (abs(adxbdy) + abs(bdxady)) * clift
    )
    errbound = _ICC_ERRBOUND_A * permanent
    if det > errbound:
        return 1
    if -det > errbound:
        return -1
    return _incircle_exact(a, b, c, d)


def in_circle(a: Point, b: Point, c: Point, d: Point) -> CircleSide:
    """Position of ``d`` relative to the circle through ``a, b, c`` (any orientation)."""
    o = orient_sign(a, b, c)
    if o == 0:
        raise CollinearBase("in_circle base points are collinear")
    return CircleSide(o * incircle_sign(a, b, c, d))


def dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def detour(p: Point, r: Point, q: Point) -> float:
    """Ratio ``(|pr| + |rq|) / |pq|`` of the two-hop path through ``r``."""
    pq = dist(p, q)
    if pq == 0.0:
        raise CoincidentEndpoints("detour endpoints coincide")
    return (dist(p, r) + dist(r, q)) / pq


def angle_at(apex: Point, u: Point, v: Point) -> float:
    """Unsigned angle in ``[0, pi]`` between rays apex->u and apex->v."""
    ux, uy = u[0] - apex[0], u[1] - apex[1]
    vx, vy = v[0] - apex[0], v[1] - apex[1]
    if (ux == 0.0 and uy == 0.0) or (vx == 0.0 and vy == 0.0):
        raise DegenerateRay("ray endpoint coincides with apex")
    return math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)


def angles_at(apex: np.ndarray, ref: np.ndarray, others: np.ndarray) -> np.ndarray:
    """Vectorised :func:`angle_at` for one apex, one reference ray and many targets."""
    u = ref - apex
    w = others - apex
    cross = np.abs(u[0] * w[:, 1] - u[1] * w[:, 0])
    dot = u[0] * w[:, 0] + u[1] * w[:, 1]
    return np.arctan2(cross, dot)


def sweep_positions(apex, q: np.ndarray) -> np.ndarray:
    """Angle swept from the leftward ray to each direction apex->q, for q not above apex.

    The leftward ray maps to 0, straight down to pi/2 and rightward to pi.
    Entries for points strictly above the apex are meaningless; callers mask them.
    """
    d = np.asarray(q, dtype=np.float64) - np.asarray(apex, dtype=np.float64)
    # + 0.0 turns -0.0 into 0.0 so the rightward ray maps to +pi, not -pi
    return np.arctan2(-d[..., 1] + 0.0, -d[..., 0])


def cone_indices(apex, q: np.ndarray, k: int) -> np.ndarray:
    """Vectorised :func:`cone_index`; ``-1`` encodes NONE."""
    q = np.atleast_2d(np.asarray(q, dtype=np.float64))
    apex = np.asarray(apex, dtype=np.float64)
    width = math.pi / (k - 1)
    s = sweep_positions(apex, q)
    idx = np.minimum(np.floor(s / width).astype(np.int64), k - 2)
    idx = np.maximum(idx, 0)
    above = q[:, 1] > apex[1]
    same = (q[:, 0] == apex[0]) & (q[:, 1] == apex[1])
    return np.where(above | same, -1, idx)


def cone_index(apex: Point, q: Point, k: int) -> Optional[int]:
    """Index of the downward cone at ``apex`` containing ``q``.

    The closed lower half-plane is split into ``k - 1`` half-open cones of width
    ``pi / (k - 1)``, numbered from the leftward ray.  The last cone also owns the
    rightward ray.  Returns ``None`` when ``q`` is strictly above ``apex`` or equal to it.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    idx = int(cone_indices(apex, np.asarray([q], dtype=np.float64), k)[0])
    return None if idx < 0 else idx


def regular_polygon(n: int, radius: float = 1.0, phase: float = 0.0, center: Sequence[float] = (0.0, 0.0)) -> np.ndarray:
    """Vertices of a regular ``n``-gon in counter-clockwise order."""
    theta = phase + 2.0 * math.pi * np.arange(n) / n
    return np.column_stack(
        [center[0] + radius * np.cos(theta), center[1] + radius * np.sin(theta)]
    )
