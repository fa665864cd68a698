"""The :class:`Coloring` value type shared by every algorithm and oracle."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..k`` per point, in input order."""

    k: int
    assignment: Tuple[int, ...]

    def __post_init__(self):
        if any(c < 1 or c > self.k for c in self.assignment):
            raise ValueError(f"colors must lie in 1..{self.k}")

    def __len__(self):
        return len(self.assignment)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.assignment, dtype=np.int64)

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment))


def coloring_from(colors: Sequence[int], k: Optional[int] = None) -> Coloring:
    colors = tuple(int(c) for c in colors)
    return Coloring(k=k if k is not None else max(colors, default=1), assignment=colors)


def as_coloring(coloring) -> Coloring:
    """Accept a :class:`Coloring` or any sequence of positive ints."""
    if isinstance(coloring, Coloring):
        return coloring
    return coloring_from(coloring)
