"""Online k-coloring: each arriving point is colored immediately and for good."""
from __future__ import annotations

import math
from typing import Iterable, List, Tuple

import numpy as np

from .errors import BadK, DuplicatePoint
from .geom import EPS_GEO, angles_at


class OnlineColorer:
    """Greedy cone-free online colorer.

    On arrival of ``p`` the colorer repeatedly takes the nearest remaining earlier
    point ``r`` (ties to the earliest arrival) and discards every remaining point
    seen from ``p`` within angle ``2*pi/k`` of ``r``.  ``p`` gets the least color not
    used by the points taken.  At most ``k - 1`` points are ever taken, so colors
    stay within ``1..k`` and the induced k-partite graph has stretch at most
    ``1 + 2 sin(pi/k)`` after every insertion.
    """

    def __init__(self, k: int):
        if k < 2:
            raise BadK(f"k must be at least 2, got {k}")
        self.k = k
        self._xy: List[Tuple[float, float]] = []
        self._colors: List[int] = []
        self._seen = set()
        self.last_neighbors: List[int] = []

    @property
    def history(self) -> np.ndarray:
        return np.asarray(self._xy, dtype=np.float64).reshape(-1, 2)

    @property
    def assignment(self) -> Tuple[int, ...]:
        return tuple(self._colors)

    def __len__(self):
        return len(self._colors)

    def select_neighbors(self, p) -> List[int]:
        """Arrival indices picked by the nearest-then-prune loop for a new point ``p``."""
        if not self._xy:
            return []
        pts = self.history
        p = np.asarray(p, dtype=np.float64)
        diff = pts - p
        d = np.hypot(diff[:, 0], diff[:, 1])
        alive = np.ones(len(pts), dtype=bool)
        limit = 2.0 * math.pi / self.k + EPS_GEO
        chosen: List[int] = []
        while alive.any():
            cand = np.flatnonzero(alive)
            # argmin returns the first minimum, i.e. the earliest arrival among ties
            r = int(cand[np.argmin(d[cand])])
            chosen.append(r)
            alive[r] = False
            cand = np.flatnonzero(alive)
            if len(cand):
                ang = angles_at(p, pts[r], pts[cand])
                alive[cand[ang <= limit]] = False
        assert len(chosen) <= self.k - 1, "more than k-1 neighbors selected"
        return chosen

    def insert(self, p) -> int:
        key = (float(p[0]), float(p[1]))
        if key in self._seen:
            raise DuplicatePoint(f"point {key} was already inserted")
        chosen = self.select_neighbors(key)
        taken = {self._colors[r] for r in chosen}
        c = 1
        while c in taken:
            c += 1
        self._xy.append(key)
        self._colors.append(c)
        self._seen.add(key)
        self.last_neighbors = chosen
        return c

    def extend(self, points: Iterable) -> List[int]:
        return [self.insert(p) for p in points]

    def coloring(self):
        from .coloring import Coloring

        return Coloring(k=self.k, assignment=self.assignment)

    def finalize_stretch(self):
        """Stretch report of the coloring accumulated so far."""
        from .analysis import stretch_factor

        return stretch_factor(self.history, self.coloring())


def create(k: int) -> OnlineColorer:
    return OnlineColorer(k)


def color_online(points, k: int):
    """Color ``points`` in the given order; returns the final :class:`Coloring`."""
    colorer = OnlineColorer(k)
    colorer.extend(np.asarray(points, dtype=np.float64).reshape(-1, 2))
    return colorer.coloring()
