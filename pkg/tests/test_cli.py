import json
import math

import pytest

from chromospan.cli import main
from chromospan.pointio import read_coloring, write_points


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.txt"
    write_points([(0, 0), (1, 0), (1, 1), (0, 1)], path)
    return path


def test_color_verify(square_file, tmp_path, capsys):
    out = tmp_path / "col.csv"
    assert main(["color", "--algo", "delaunay4", "--in", str(square_file), "--out", str(out), "--verify"]) == 0
    assert capsys.readouterr().out.strip() == "stretch=1.414214 bound=1.414214 PASS"
    assert len(read_coloring(out)) == 4


@pytest.mark.parametrize("algo, k", [("mst2", None), ("ellipse3", None), ("cones", 5), ("online", 3)])
def test_color_algorithms(algo, k, square_file, tmp_path, capsys):
    args = ["color", "--algo", algo, "--in", str(square_file), "--out", str(tmp_path / "c.csv"), "--verify"]
    if k:
        args += ["--k", str(k)]
    assert main(args) == 0
    assert capsys.readouterr().out.rstrip().endswith("PASS")


def test_color_sparsify(square_file, tmp_path, capsys):
    out = tmp_path / "col.csv"
    assert main(["color", "--algo", "cones", "--k", "3", "--in", str(square_file),
                 "--out", str(out), "--sparsify", "0.5"]) == 0
    edges = (tmp_path / "col.edges.csv").read_text().splitlines()
    assert edges[0] == "u,v" and len(edges) > 1


def test_usage_errors(square_file, tmp_path, capsys):
    out = str(tmp_path / "c.csv")
    assert main(["color", "--algo", "cones", "--in", str(square_file), "--out", out]) == 1
    assert main(["color", "--algo", "mst2", "--k", "3", "--in", str(square_file), "--out", out]) == 1
    assert main(["color", "--algo", "cones", "--k", "3", "--in", str(tmp_path / "missing"), "--out", out]) == 1
    assert main(["frobnicate"]) == 1
    assert "usage error" in capsys.readouterr().err


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n1 x\n")
    assert main(["color", "--algo", "mst2", "--in", str(bad), "--out", str(tmp_path / "c.csv")]) == 1
    assert "line 2" in capsys.readouterr().err


def test_verify_subcommand(square_file, tmp_path, capsys):
    col = tmp_path / "c.csv"
    col.write_text("index,color\n0,1\n1,2\n2,1\n3,2\n")
    assert main(["verify", "--in", str(square_file), "--coloring", str(col), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["stretch"] == pytest.approx(math.sqrt(2))
    assert data["worst_pair"] == [0, 2] and data["witness"] == 1
    assert main(["verify", "--in", str(square_file), "--coloring", str(col), "--bound", "1.2"]) == 2
    assert "FAIL" in capsys.readouterr().out


def test_verify_size_mismatch(square_file, tmp_path):
    col = tmp_path / "c.csv"
    col.write_text("index,color\n0,1\n1,2\n")
    assert main(["verify", "--in", str(square_file), "--coloring", str(col)]) == 1


def test_table_subcommand(capsys):
    assert main(["table", "--trials", "2", "--n", "10", "--k-min", "2", "--k-max", "3", "--workers", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "k,mode,mean,std,min,max,trials"
    assert len(lines) == 5
    assert main(["table", "--modes", "bogus"]) == 1


def test_lowerbound_subcommand(tmp_path, capsys):
    out = tmp_path / "pent.txt"
    assert main(["lowerbound", "--kind", "k2", "--n", "5", "--out", str(out), "--bruteforce"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["optimal_stretch"] >= info["analytic_bound"] - 1e-6
    assert out.read_text().startswith("# k2")
    assert main(["lowerbound", "--kind", "online", "--k", "6"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["algorithm_stretch"] >= info["analytic_bound"] - 1e-6
    assert main(["lowerbound", "--kind", "k4"]) == 1
