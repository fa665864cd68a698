import math
from itertools import combinations

import numpy as np
import pytest


def brute_stretch(points, colors):
    """Two-hop stretch of a coloring, straight from the ellipse definition."""
    pts = [tuple(map(float, p)) for p in points]
    worst = 1.0
    for i, j in combinations(range(len(pts)), 2):
        if colors[i] != colors[j]:
            continue
        dij = math.dist(pts[i], pts[j])
        best = math.inf
        for r in range(len(pts)):
            if colors[r] != colors[i]:
                best = min(best, (math.dist(pts[i], pts[r]) + math.dist(pts[r], pts[j])) / dij)
        worst = max(worst, best)
    return worst


def kruskal_weight(points):
    """MST weight by Kruskal with union-find, independent of the library's Prim."""
    pts = [tuple(p) for p in points]
    n = len(pts)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total = 0.0
    for d, i, j in sorted((math.dist(pts[i], pts[j]), i, j) for i, j in combinations(range(n), 2)):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            total += d
    return total


def random_points(seed, n):
    return np.random.default_rng(seed).random((n, 2))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def unit_square():
    return np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


@pytest.fixture
def equilateral():
    return np.array([[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3.0) / 2.0]])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
