"""Plain-text point files and coloring / edge CSVs.

Point files hold one ``x y`` pair per line; ``#`` starts a comment and blank
lines are skipped.  Coordinates are written with ``repr`` so a write/read round
trip reproduces every float exactly.
"""
from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Iterable, List, Tuple

import numpy as np

from .coloring import Coloring
from .errors import ParseError
from .geom import check_distinct


def parse_points(text: str) -> np.ndarray:
    rows: List[Tuple[float, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 2 coordinates, got {len(parts)}")
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError:
            raise ParseError(lineno, f"not a number: {line!r}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ParseError(lineno, "coordinates must be finite")
        rows.append((x, y))
    pts = np.asarray(rows, dtype=np.float64).reshape(-1, 2)
    check_distinct(pts)
    return pts


def read_points(path) -> np.ndarray:
    return parse_points(Path(path).read_text())


def format_points(points, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    for x, y in np.asarray(points, dtype=np.float64).reshape(-1, 2).tolist():
        lines.append(f"{x!r} {y!r}")
    return "\n".join(lines) + "\n"


def write_points(points, path, comment: str | None = None) -> None:
    Path(path).write_text(format_points(points, comment))


def write_coloring(coloring: Coloring, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["index", "color"])
        for i, c in enumerate(coloring.assignment):
            w.writerow([i, c])


def read_coloring(path, k: int | None = None) -> Coloring:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    colors = [0] * len(rows)
    for lineno, row in enumerate(rows, start=2):
        try:
            i, c = int(row["index"]), int(row["color"])
        except (KeyError, TypeError, ValueError):
            raise ParseError(lineno, "expected integer 'index,color'") from None
        if not 0 <= i < len(rows):
            raise ParseError(lineno, f"index {i} out of range")
        colors[i] = c
    return Coloring(k=k if k is not None else max(colors, default=1), assignment=tuple(colors))


def write_edges(edges: Iterable[Tuple[int, int]], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["u", "v"])
        w.writerows(edges)
