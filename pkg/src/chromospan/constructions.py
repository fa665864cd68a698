"""Point sets that force large stretch, each paired with its analytic bound."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .analysis import stretch_factor
from .coloring import Coloring
from .errors import BadK, BadN
from .geom import regular_polygon
from .online import OnlineColorer


@dataclass(frozen=True)
class LowerBoundInstance:
    points: np.ndarray
    k: int
    analytic_bound: float
    bound_formula: str
    online: bool = False


def _check_odd(n: int):
    if n < 3 or n % 2 == 0:
        raise BadN(f"n must be odd and at least 3, got {n}")


def _unit_side_polygon(n: int) -> np.ndarray:
    return regular_polygon(n, radius=1.0 / (2.0 * math.sin(math.pi / n)))


def gen_lb_k2(n: int) -> LowerBoundInstance:
    """Odd regular n-gon with unit side: some adjacent pair shares one of 2 colors."""
    _check_odd(n)
    bound = 1.0 + 2.0 * math.sin((n - 2) * math.pi / (2 * n))
    return LowerBoundInstance(_unit_side_polygon(n), 2, bound, "1 + 2 sin((n-2)pi/(2n))")


def gen_lb_k3(n: int) -> LowerBoundInstance:
    """Odd unit-side n-gon plus the outer apex of an equilateral triangle on every side.

    Points ``0..n-1`` are the polygon (counter-clockwise); point ``n + i`` is the
    apex over side ``(i, i + 1)``.
    """
    _check_odd(n)
    p = _unit_side_polygon(n)
    nxt = np.roll(p, -1, axis=0)
    mid = 0.5 * (p + nxt)
    side = nxt - p
    # outward normal of a counter-clockwise polygon side is the side rotated clockwise
    normal = np.column_stack([side[:, 1], -side[:, 0]])
    q = mid + normal * (math.sqrt(3.0) / 2.0)
    bound = min(2.0, 1.0 / math.sin((n + 6) * math.pi / (6 * n)))
    return LowerBoundInstance(np.vstack([p, q]), 3, bound, "min(2, 1/sin((n+6)pi/(6n)))")


def gen_lb_k4(n: int) -> LowerBoundInstance:
    """Two concentric, radially aligned odd n-gons; ray gap equals the inner side."""
    _check_odd(n)
    r = 1.0 / (2.0 * math.sin(math.pi / n))
    inner = regular_polygon(n, radius=r)
    outer = regular_polygon(n, radius=r + 1.0)
    bound = 1.0 / math.sin((n + 2) * math.pi / (4 * n))
    return LowerBoundInstance(np.vstack([inner, outer]), 4, bound, "1/sin((n+2)pi/(4n))")


def gen_lb_kgon(k: int) -> LowerBoundInstance:
    """Regular (k+1)-gon: pigeonhole forces a repeated color among k+1 vertices."""
    if k <= 4:
        raise BadK(f"k must exceed 4, got {k}")
    bound = 1.0 / math.cos(math.pi / (k + 1))
    return LowerBoundInstance(_unit_side_polygon(k + 1), k, bound, "1/cos(pi/(k+1))")


def gen_online_lb(k: int) -> LowerBoundInstance:
    """Online adversary sequence: polygon vertices first, then the center.

    For ``k >= 5`` the polygon is a regular k-gon of unit circumradius.  For
    ``k = 4`` it is the unit square; its bound ``1 + sqrt(2)`` holds only when the
    four corners end up with four different colors.
    """
    if k < 4:
        raise BadK(f"k must be at least 4, got {k}")
    if k == 4:
        pts = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.5, 0.5]])
        return LowerBoundInstance(pts, 4, 1.0 + math.sqrt(2.0), "1 + sqrt(2) if corners rainbow", online=True)
    pts = np.vstack([regular_polygon(k), [[0.0, 0.0]]])
    return LowerBoundInstance(pts, k, 1.0 / math.cos(math.pi / k), "1/cos(pi/k)", online=True)


def k3_online_probe() -> LowerBoundInstance:
    """Equilateral triangle then its center.

    This is not a guaranteed adversary; its bound field records the stretch
    ``1 + sqrt(3)`` reached only if the three corners get three colors.
    """
    h = math.sqrt(3.0) / 2.0
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, h], [0.5, h / 3.0]])
    return LowerBoundInstance(pts, 3, 1.0 + math.sqrt(3.0), "1 + sqrt(3) if corners rainbow (probe only)", online=True)


def run_adversary(k: int, algorithm: Callable[[int], object] = OnlineColorer,
                  instance: Optional[LowerBoundInstance] = None) -> float:
    """Feed the online adversary sequence to ``algorithm`` and return the final stretch.

    ``algorithm(k)`` must return an object whose ``insert(point)`` yields the
    point's color.
    """
    inst = instance if instance is not None else gen_online_lb(k)
    colorer = algorithm(k)
    colors = [int(colorer.insert(tuple(p))) for p in inst.points]
    k_eff = max(k, max(colors))
    return stretch_factor(inst.points, Coloring(k=k_eff, assignment=tuple(colors))).stretch
