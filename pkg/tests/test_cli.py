import json

import pytest

from greedoid_tutte.cli import main
from greedoid_tutte.carriers import format_carrier, parse_carrier_text
from greedoid_tutte import RootedDigraph, demo_binary_matrix, path_graph


@pytest.fixture
def files(tmp_path):
    paths = {}
    paths["p2"] = tmp_path / "p2.graph"
    paths["p2"].write_text(format_carrier(path_graph(2)))
    paths["demo"] = tmp_path / "demo.matrix"
    paths["demo"].write_text(format_carrier(demo_binary_matrix()))
    paths["dpath"] = tmp_path / "dpath.digraph"
    paths["dpath"].write_text(format_carrier(RootedDigraph(3, ((0, 1), (1, 2)), 0)))
    paths["c4"] = tmp_path / "c4.graph"
    paths["c4"].write_text("edge 0 1\nedge 1 2\nedge 2 3\nedge 0 3\n")
    paths["s1"] = tmp_path / "s1.graph"
    paths["s1"].write_text(format_carrier(path_graph(1)))
    return paths


def test_tutte_json_deterministic(files, capsys):
    assert main(["tutte", str(files["p2"])]) == 0
    first = capsys.readouterr().out
    assert main(["tutte", str(files["p2"])]) == 0
    second = capsys.readouterr().out
    assert first == second
    terms = json.loads(first)
    assert terms == [
        {"xexp": 0, "yexp": 1, "num": "1", "den": "1"},
        {"xexp": 1, "yexp": 0, "num": "1", "den": "1"},
        {"xexp": 1, "yexp": 1, "num": "-2", "den": "1"},
        {"xexp": 2, "yexp": 1, "num": "1", "den": "1"},
    ]


def test_eval_demo_matrix(files, capsys):
    assert main(["eval", str(files["demo"]), "--x", "1/1", "--y", "1/1"]) == 0
    assert capsys.readouterr().out.strip() == "3"
    assert main(["eval", str(files["demo"]), "--x", "2", "--y", "1"]) == 0
    assert capsys.readouterr().out.strip() == "9"


def test_eval_rejects_floats(files, capsys):
    assert main(["eval", str(files["p2"]), "--x", "1.5", "--y", "1"]) == 2


def test_restrict_halpha(files, capsys):
    assert main(["restrict", str(files["p2"]), "--curve", "halpha", "--alpha", "2"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj == [
        {"exp": -2, "num": "4", "den": "1"},
        {"exp": -1, "num": "6", "den": "1"},
        {"exp": 0, "num": "1", "den": "1"},
    ]
    assert main(["restrict", str(files["p2"]), "--curve", "halpha"]) == 2  # missing alpha


def test_reduce_curve_report(files, capsys):
    assert main(["reduce", "curve", str(files["p2"]), "--a", "3", "--b", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["match"] is True
    assert report["oracle_calls"] == 5
    assert report["recovered"] == report["direct"]


def test_reduce_forbidden_point_exit_code(files, capsys):
    assert main(["reduce", "yminus1", str(files["p2"]), "--a", "1/2", "--b", "-1"]) == 3
    err = capsys.readouterr().err
    assert "ForbiddenPoint" in err


def test_reduce_yminus1_report(files, capsys):
    assert main(["reduce", "yminus1", str(files["dpath"]), "--a", "3", "--b", "-1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["match"] is True
    assert report["curve"] == "y=-1"


def test_construct_round_trip(files, capsys, tmp_path):
    out = tmp_path / "thick.graph"
    assert main(["construct", "thicken", str(files["p2"]), "--k", "3", "--out", str(out)]) == 0
    carrier = parse_carrier_text(out.read_text())
    assert carrier.edge_count == 6
    assert main(["construct", "bidirect", str(files["p2"])]) == 0
    arcs = capsys.readouterr().out
    assert arcs.count("arc") == 4
    assert main(["construct", "attach", str(files["p2"]), "--with", str(files["s1"])]) == 0
    attached = parse_carrier_text(capsys.readouterr().out)
    assert attached.edge_count == 4
    assert main(["construct", "digon", str(files["dpath"]), "--k", "2"]) == 0
    stretched = parse_carrier_text(capsys.readouterr().out)
    assert stretched.edge_count == 10
    assert main(["construct", "fullrank", str(files["demo"]), "--with", str(files["demo"])]) == 0
    doubled = parse_carrier_text(capsys.readouterr().out)
    assert doubled.col_count == 8


def test_vertigan_report(files, capsys):
    assert main(["vertigan", str(files["c4"]), "--field", "gf2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["match"] is True
    assert report["recovered_perfect_matchings"] == 2
    assert report["b_values"]["1"] == "4064"


def test_verify_suites(files, capsys):
    assert main(["verify", "fullrank"]) == 0
    out = capsys.readouterr().out
    assert "suite fullrank: pass" in out
    assert main(["verify", "axioms", "--file", str(files["demo"])]) == 0
    assert "axioms pass" in capsys.readouterr().out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("root 0\nedge 0 1\narc 1 2\n")
    assert main(["tutte", str(bad)]) == 2
    missing = tmp_path / "missing.graph"
    assert main(["tutte", str(missing)]) == 2


def test_bound_exit_code(tmp_path, capsys):
    big = tmp_path / "big.graph"
    big.write_text(format_carrier(path_graph(21)))
    assert main(["tutte", str(big)]) == 4
    assert main(["eval", str(big), "--x", "1", "--y", "1", "--max-elements", "21"]) == 0
    assert capsys.readouterr().out.strip() == "1"
