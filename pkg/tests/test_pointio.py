import numpy as np
import pytest

from chromospan.coloring import coloring_from
from chromospan.errors import DuplicatePoints, ParseError
from chromospan.pointio import (
    format_points,
    parse_points,
    read_coloring,
    read_points,
    write_coloring,
    write_edges,
    write_points,
)


def test_parse_comments_blanks_and_commas():
    text = "# header\n0 0\n\n1.5, 2  # trailing\n  -3e-2\t4\n"
    assert parse_points(text).tolist() == [[0.0, 0.0], [1.5, 2.0], [-0.03, 4.0]]


def test_parse_empty():
    assert parse_points("# nothing\n").shape == (0, 2)


@pytest.mark.parametrize(
    "text, line",
    [("0 0\n1\n", 2), ("0 0\n1 2 3\n", 2), ("x y\n", 1), ("0 0\n\n1 nan\n", 3)],
)
def test_parse_errors_report_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_points(text)
    assert err.value.line == line
    assert str(err.value).startswith(f"line {line}:")


def test_parse_duplicates():
    with pytest.raises(DuplicatePoints):
        parse_points("0 0\n1 1\n0 0\n")


def test_round_trip_is_exact(tmp_path):
    pts = np.random.default_rng(0).random((50, 2)) * 1e3 - 500
    path = tmp_path / "p.txt"
    write_points(pts, path, comment="random\nsecond line")
    assert np.array_equal(read_points(path), pts)
    assert format_points(pts).count("\n") == 50


def test_coloring_round_trip(tmp_path):
    col = coloring_from([2, 1, 3, 1])
    path = tmp_path / "c.csv"
    write_coloring(col, path)
    assert path.read_text().splitlines()[:2] == ["index,color", "0,2"]
    assert read_coloring(path) == col


def test_read_coloring_bad_index(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text("index,color\n0,1\n5,2\n")
    with pytest.raises(ParseError):
        read_coloring(path)


def test_write_edges(tmp_path):
    path = tmp_path / "e.csv"
    write_edges([(0, 1), (1, 2)], path)
    assert path.read_text() == "u,v\n0,1\n1,2\n"
