"""Seeded simulation sweeps: mean stretch of the cone and online colorings.

Each trial draws ``n`` uniform points in the unit square from its own generator,
seeded by ``(seed, trial)``, so results do not depend on how trials are
scheduled.  One point set serves every ``k`` and every mode of its trial.
"""
from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .analysis import stretch_factor
from .offline import color_cones_k, color_delaunay_4, color_ellipse_3, color_mst_2
from .online import color_online

MODES = ("offline_k", "online_k", "offline_specialized")

# printed means of the reference simulation, (k, mode) -> mean
PUBLISHED_MEANS: Dict[int, Dict[Tuple[int, str], float]] = {
    50: {
        (2, "offline_k"): 2.2383, (2, "online_k"): 2.5208,
        (3, "offline_k"): 1.7219, (3, "online_k"): 2.1111,
        (4, "offline_k"): 1.4907, (4, "online_k"): 1.8608,
        (5, "offline_k"): 1.3631, (5, "online_k"): 1.7300,
        (6, "offline_k"): 1.2877, (6, "online_k"): 1.6098,
        (7, "offline_k"): 1.2329, (7, "online_k"): 1.5456,
        (8, "offline_k"): 1.1947, (8, "online_k"): 1.4778,
        (9, "offline_k"): 1.1658, (9, "online_k"): 1.4175,
        (10, "offline_k"): 1.1384, (10, "online_k"): 1.3765,
    },
    200: {
        (2, "offline_k"): 2.5390, (2, "online_k"): 2.7844,
        (3, "offline_k"): 1.9245, (3, "online_k"): 2.3743,
        (4, "offline_k"): 1.6377, (4, "online_k"): 2.0866,
        (5, "offline_k"): 1.4831, (5, "online_k"): 1.9062,
        (6, "offline_k"): 1.3809, (6, "online_k"): 1.7579,
        (7, "offline_k"): 1.3079, (7, "online_k"): 1.6563,
        (8, "offline_k"): 1.2579, (8, "online_k"): 1.5833,
        (9, "offline_k"): 1.2283, (9, "online_k"): 1.5149,
        (10, "offline_k"): 1.1945, (10, "online_k"): 1.4677,
    },
}

CSV_HEADER = ("k", "mode", "mean", "std", "min", "max", "trials")


@dataclass(frozen=True)
class ExperimentConfig:
    trials: int = 200
    n: int = 50
    k_range: Tuple[int, ...] = tuple(range(2, 11))
    modes: Tuple[str, ...] = ("offline_k", "online_k")
    seed: int = 0
    distribution: str = "uniform_unit_square"

    def __post_init__(self):
        object.__setattr__(self, "k_range", tuple(int(k) for k in self.k_range))
        object.__setattr__(self, "modes", tuple(self.modes))
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if not self.k_range or any(k < 2 for k in self.k_range):
            raise ValueError("every k must be at least 2")
        if not self.modes or any(m not in MODES for m in self.modes):
            raise ValueError(f"modes must be drawn from {MODES}")
        if self.distribution != "uniform_unit_square":
            raise ValueError("only uniform_unit_square is supported")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class Row:
    k: int
    mode: str
    mean: float
    std: float
    min: float
    max: float
    trials: int


@dataclass
class ResultTable:
    config: ExperimentConfig
    rows: List[Row]
    redraws: int = 0
    samples: Dict[Tuple[int, str], List[float]] = field(default_factory=dict, repr=False)

    def get(self, k: int, mode: str) -> Row:
        for row in self.rows:
            if row.k == k and row.mode == mode:
                return row
        raise KeyError((k, mode))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow([r.k, r.mode, f"{r.mean:.6f}", f"{r.std:.6f}", f"{r.min:.6f}", f"{r.max:.6f}", r.trials])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "config": {
                "trials": self.config.trials,
                "n": self.config.n,
                "k_range": list(self.config.k_range),
                "modes": list(self.config.modes),
                "seed": self.config.seed,
                "distribution": self.config.distribution,
            },
            "redraws": self.redraws,
            "rows": [r.__dict__ for r in self.rows],
        }


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


def draw_points(rng: np.random.Generator, n: int) -> Tuple[np.ndarray, int]:
    """``n`` distinct uniform points; colliding draws are replaced. Returns (points, redraws)."""
    pts = rng.random((n, 2))
    redraws = 0
    while True:
        _, first = np.unique(pts, axis=0, return_index=True)
        if len(first) == n:
            return pts, redraws
        dup = np.setdiff1d(np.arange(n), first)
        pts[dup] = rng.random((len(dup), 2))
        redraws += len(dup)


def _specialized(points: np.ndarray, k: int):
    if k == 2:
        return color_mst_2(points)
    if k == 3:
        return color_ellipse_3(points)[0]
    if k == 4:
        return color_delaunay_4(points)
    return color_cones_k(points, k)


def run_trial(config: ExperimentConfig, trial: int) -> Tuple[Dict[Tuple[int, str], float], int]:
    rng = trial_rng(config.seed, trial)
    pts, redraws = draw_points(rng, config.n)
    arrival = rng.permutation(config.n)
    out: Dict[Tuple[int, str], float] = {}
    for k in config.k_range:
        for mode in config.modes:
            if mode == "offline_k":
                s = stretch_factor(pts, color_cones_k(pts, k)).stretch
            elif mode == "online_k":
                seq = pts[arrival]
                s = stretch_factor(seq, color_online(seq, k)).stretch
            else:
                s = stretch_factor(pts, _specialized(pts, k)).stretch
            out[(k, mode)] = s
    return out, redraws


def _worker_count() -> int:
    env = os.environ.get("CHROMOSPAN_THREADS")
    if env:
        return max(1, int(env))
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1))


def _run_chunk(args):
    config, trials = args
    return [run_trial(config, t) for t in trials]


def run_experiment(config: ExperimentConfig, workers: int | None = None) -> ResultTable:
    """Run every trial and aggregate per ``(k, mode)``.

    Parallelism is capped by ``workers`` or the ``CHROMOSPAN_THREADS`` variable;
    the table is identical for any worker count.
    """
    workers = workers or _worker_count()
    trials = list(range(config.trials))
    if workers > 1 and config.trials > 1:
        chunks = [trials[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_run_chunk, [(config, c) for c in chunks]))
        by_trial = {}
        for chunk, part in zip(chunks, parts):
            by_trial.update(zip(chunk, part))
        results = [by_trial[t] for t in trials]
    else:
        results = [run_trial(config, t) for t in trials]

    samples: Dict[Tuple[int, str], List[float]] = {}
    redraws = 0
    for values, r in results:
        redraws += r
        for key, s in values.items():
            samples.setdefault(key, []).append(s)

    rows = []
    for k in config.k_range:
        for mode in config.modes:
            xs = np.asarray(samples[(k, mode)], dtype=np.float64)
            std = float(xs.std(ddof=1)) if len(xs) > 1 else 0.0
            rows.append(Row(k, mode, float(xs.mean()), std, float(xs.min()), float(xs.max()), len(xs)))
    return ResultTable(config=config, rows=rows, redraws=redraws, samples=samples)


def hard_bound(k: int, mode: str) -> float:
    if mode == "online_k":
        return 1.0 + 2.0 * math.sin(math.pi / k)
    if mode == "offline_specialized" and k <= 4:
        return {2: 3.0, 3: 2.0, 4: math.sqrt(2.0)}[k]
    return 1.0 + 2.0 * math.sin(math.pi / (2 * k - 2))
