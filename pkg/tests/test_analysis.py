import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromospan.analysis import (
    bichromatic_edges,
    dijkstra_stretch,
    has_ellipse_property,
    is_plane_graph,
    is_triangle_free,
    optimal_coloring_bruteforce,
    sparsify_greedy,
    stretch_factor,
)
from chromospan.coloring import coloring_from
from chromospan.errors import BudgetExceeded
from chromospan.geom import regular_polygon
from chromospan.offline import color_delaunay_4

from conftest import brute_stretch, random_points


def test_stretch_square_alternating(unit_square):
    rep = stretch_factor(unit_square, coloring_from([1, 2, 1, 2]))
    assert rep.stretch == pytest.approx(math.sqrt(2), abs=1e-12)
    assert rep.worst_pair == (0, 2)
    assert rep.witness == 1


def test_stretch_rainbow_is_one(equilateral):
    assert stretch_factor(equilateral, coloring_from([1, 2, 3])).stretch == 1.0


def test_stretch_monochromatic_is_infinite():
    rep = stretch_factor([(0, 0), (1, 0)], coloring_from([1, 1], k=2))
    assert rep.is_infinite
    assert rep.worst_pair == (0, 1)


def test_stretch_length_mismatch():
    with pytest.raises(ValueError):
        stretch_factor([(0, 0), (1, 0)], coloring_from([1, 2, 1]))


@pytest.mark.parametrize("seed", range(10))
def test_stretch_matches_brute(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 40))
    pts = rng.random((n, 2))
    colors = rng.integers(1, 4, size=n)
    if len(set(colors.tolist())) == 1:
        colors[0] = 1 + colors[0] % 3
    assert stretch_factor(pts, coloring_from(colors)).stretch == pytest.approx(
        brute_stretch(pts, colors.tolist()), abs=1e-12
    )


def test_stretch_large_class_blocks():
    # more than one row block per color class
    pts = random_points(4, 300)
    colors = [1 + (i % 2) for i in range(300)]
    assert stretch_factor(pts, coloring_from(colors)).stretch == pytest.approx(
        brute_stretch(pts, colors), abs=1e-12
    )


def test_dijkstra_examples(unit_square):
    col = coloring_from([1, 2, 1, 2])
    rep = dijkstra_stretch(unit_square, bichromatic_edges(col))
    assert rep.stretch == pytest.approx(math.sqrt(2), abs=1e-12)
    assert dijkstra_stretch([(0, 0), (1, 0)], []).is_infinite
    assert dijkstra_stretch([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)]).stretch == 1.0


def test_two_routes_agree_on_100_instances():
    rng = np.random.default_rng(99)
    for _ in range(100):
        n = int(rng.integers(3, 30))
        pts = rng.random((n, 2))
        k = int(rng.integers(2, 6))
        colors = rng.integers(1, k + 1, size=n)
        colors[:2] = [1, 2]
        col = coloring_from(colors, k=k)
        a = stretch_factor(pts, col).stretch
        b = dijkstra_stretch(pts, bichromatic_edges(col)).stretch
        assert a == pytest.approx(b, rel=1e-9)


def test_ellipse_property_threshold(unit_square):
    col = coloring_from([1, 2, 1, 2])
    assert has_ellipse_property(unit_square, col, math.sqrt(2))
    assert not has_ellipse_property(unit_square, col, 1.4)
    assert not has_ellipse_property([(0, 0), (1, 0)], coloring_from([1, 1], k=2), 100.0)


@pytest.mark.parametrize("seed", range(5))
def test_ellipse_property_consistent_with_stretch(seed):
    pts = random_points(seed, 25)
    col = coloring_from(np.random.default_rng(seed).integers(1, 4, size=25), k=3)
    s = stretch_factor(pts, col).stretch
    assert has_ellipse_property(pts, col, s)
    assert has_ellipse_property(pts, col, s + 0.1)
    assert not has_ellipse_property(pts, col, s - 1e-6)


def test_plane_graph_square(unit_square):
    assert is_plane_graph(unit_square, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert not is_plane_graph(unit_square, [(0, 2), (1, 3)])
    # an edge passing through a third point
    assert not is_plane_graph([(0, 0), (1, 0), (2, 0)], [(0, 2)])
    # shared endpoint is fine
    assert is_plane_graph([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)])


def test_triangle_free():
    assert is_triangle_free([(0, 1), (1, 2), (2, 3), (3, 0)])
    assert not is_triangle_free([(0, 1), (1, 2), (0, 2)])
    assert is_triangle_free([])


def test_bruteforce_examples():
    pentagon = regular_polygon(5, radius=1 / (2 * math.sin(math.pi / 5)))
    col, s = optimal_coloring_bruteforce(pentagon, 2)
    assert s == pytest.approx((1 + math.sqrt(5)) / 2 + 1, abs=1e-12)
    assert col.assignment[0] == 1
    assert s == pytest.approx(brute_stretch(pentagon, col.assignment), abs=1e-12)
    _, s3 = optimal_coloring_bruteforce(pentagon, 5)
    assert s3 == 1.0


def test_bruteforce_against_itertools():
    import itertools

    pts = random_points(3, 6)
    best = min(
        brute_stretch(pts, (1,) + c) for c in itertools.product((1, 2, 3), repeat=5)
    )
    _, s = optimal_coloring_bruteforce(pts, 3, chunk=7)
    assert s == pytest.approx(best, abs=1e-12)


def test_bruteforce_budget():
    with pytest.raises(BudgetExceeded):
        optimal_coloring_bruteforce(random_points(0, 30), 4, budget=1e6)


def test_sparsify_collinear_rainbow():
    sp = sparsify_greedy([(0, 0), (1, 0), (2, 0)], coloring_from([1, 2, 3]), 0.1)
    assert sp.edges == ((0, 1), (1, 2))


def test_sparsify_rejects_bad_epsilon(unit_square):
    with pytest.raises(ValueError):
        sparsify_greedy(unit_square, coloring_from([1, 2, 1, 2]), 0.0)


def _plain_path_greedy(pts, colors, t):
    import heapq

    n = len(pts)
    D = np.hypot(*(pts[:, None, :] - pts[None, :, :]).transpose(2, 0, 1))
    pairs = sorted((D[i, j], i, j) for i in range(n) for j in range(i + 1, n) if colors[i] != colors[j])
    adj = [[] for _ in range(n)]
    out = []
    for d, i, j in pairs:
        dist = {i: 0.0}
        heap = [(0.0, i)]
        while heap:
            du, u = heapq.heappop(heap)
            if du > dist.get(u, math.inf):
                continue
            for v, w in adj[u]:
                if du + w < dist.get(v, math.inf):
                    dist[v] = du + w
                    heapq.heappush(heap, (du + w, v))
        if dist.get(j, math.inf) > t * d:
            adj[i].append((j, d))
            adj[j].append((i, d))
            out.append((i, j))
    return tuple(out)


@pytest.mark.parametrize("seed", range(4))
def test_sparsify_matches_plain_path_greedy(seed):
    pts = random_points(seed, 40)
    col = color_delaunay_4(pts)
    sp = sparsify_greedy(pts, col, 0.5)
    assert sp.edges == _plain_path_greedy(pts, col.assignment, 1.5)


@pytest.mark.parametrize("seed", range(3))
def test_sparsify_is_bichromatic_spanner(seed):
    pts = random_points(seed, 100)
    col = color_delaunay_4(pts)
    sp = sparsify_greedy(pts, col, 0.5)
    assert all(col.assignment[u] != col.assignment[v] for u, v in sp.edges)
    assert dijkstra_stretch(pts, sp.edges).stretch <= 1.5 * stretch_factor(pts, col).stretch + 1e-9


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.tuples(st.floats(0, 1, allow_nan=False), st.floats(0, 1, allow_nan=False)),
        min_size=3, max_size=15, unique=True,
    ),
    st.integers(2, 4),
    st.integers(0, 2**31),
)
def test_stretch_at_least_one_and_matches_brute(pts, k, seed):
    colors = np.random.default_rng(seed).integers(1, k + 1, size=len(pts))
    rep = stretch_factor(pts, coloring_from(colors, k=k))
    assert rep.stretch >= 1.0
    assert rep.stretch == pytest.approx(brute_stretch(pts, colors.tolist()), rel=1e-12)
