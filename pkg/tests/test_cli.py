import json
import subprocess
import sys
from pathlib import Path

import pytest

from sandpilegroups import Multigraph, build_ch_canonical, read_graph, write_graph
from sandpilegroups.cli import main

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def c5(tmp_path):
    path = tmp_path / "c5.txt"
    write_graph(Multigraph.cycle(5), path)
    return str(path)


def test_group_cycle(capsys, c5):
    code, out, _ = run(capsys, "group", c5)
    assert code == 0
    assert out.splitlines() == ["C_5", "order 5"]


def test_group_chain(capsys, tmp_path):
    path = tmp_path / "ch.txt"
    write_graph(build_ch_canonical([3, 6, 4, 6]), path)
    code, out, _ = run(capsys, "group", str(path))
    assert code == 0
    assert out.splitlines()[0] == "C_373"


def test_group_json(capsys, c5):
    code, out, _ = run(capsys, "group", c5, "--json")
    report = json.loads(out)
    assert code == 0
    assert report == {
        "command": "group",
        "inputs": {"path": c5, "drop": None},
        "result": {"factors": ["5"], "order": "5"},
    }


def test_group_print_matrix(capsys, c5):
    code, out, _ = run(capsys, "group", c5, "--print-matrix")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["2", "-1", "0", "0"]
    assert lines[-2:] == ["C_5", "order 5"]


def test_group_self_loop_is_parse_error(capsys, tmp_path):
    path = tmp_path / "loop.txt"
    path.write_text("vertices 2\nedge 1 1 1\n")
    code, out, err = run(capsys, "group", str(path))
    assert code == 2
    assert "self-loop" in err and out == ""


def test_group_disconnected(capsys, tmp_path):
    path = tmp_path / "two.txt"
    path.write_text("vertices 2\n")
    code, _, err = run(capsys, "group", str(path))
    assert code == 2
    assert "disconnected" in err


def test_group_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "group", str(tmp_path / "nope.txt"))
    assert code == 2


def test_gen_ch_canonical(capsys, tmp_path):
    out_path = tmp_path / "g.txt"
    code, out, _ = run(capsys, "gen", "ch-canonical", "--a", "3,6,4,6", "--out", str(out_path))
    assert code == 0
    assert "13 vertices" in out
    assert read_graph(out_path) == build_ch_canonical([3, 6, 4, 6])


def test_gen_to_stdout(capsys):
    code, out, _ = run(capsys, "gen", "ch-canonical", "--a", "5")
    assert code == 0
    assert out.splitlines() == ["vertices 5", "edge 1 2 1", "edge 1 5 1", "edge 2 3 1", "edge 3 4 1", "edge 4 5 1"]


def test_gen_h_example(capsys, tmp_path):
    out_path = tmp_path / "h1.txt"
    code, out, _ = run(
        capsys, "gen", "h", "--n", "6", "--i", "1",
        "--F", str(DATA / "triangle.txt"), "--G", str(DATA / "single_edge.txt"),
        "--f1", "1,0,0", "--f2", "0,0,2", "--g1", "1,1", "--g2", "1,1",
        "--out", str(out_path), "--json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["result"]["vertices"] == "11"
    assert report["result"]["edges"] == "17"
    assert read_graph(out_path).vertex_count == 11


def test_gen_ch_member_and_dot(capsys):
    code, out, _ = run(capsys, "gen", "ch-member", "--a", "3,4", "--plan", "1", "--dot")
    assert code == 0
    assert out.startswith("graph G {")
    assert out.count("--") == 3 + 3


def test_gen_invalid_spec(capsys):
    code, _, err = run(capsys, "gen", "ch-canonical", "--a", "3,1")
    assert code == 2
    code, _, err = run(capsys, "gen", "h", "--n", "2", "--i", "0")
    assert code == 2
    code, _, err = run(capsys, "gen", "ch-canonical")
    assert code == 2 and "--a" in err


def test_bad_csv_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["formula", "f", "--a", "3,x"])
    assert info.value.code == 2


@pytest.mark.parametrize(
    "kind, a, value",
    [("f", "3,6,4,6", "373"), ("g", "3,6,4,6", "373"), ("f", "7", "7")],
)
def test_formula(capsys, kind, a, value):
    code, out, _ = run(capsys, "formula", kind, "--a", a)
    assert code == 0
    assert out.strip() == value


def test_formula_big_integer_printed_in_full(capsys):
    code, out, _ = run(capsys, "formula", "f", "--a", ",".join(["9"] * 60), "--json")
    value = json.loads(out)["result"]["value"]
    assert value.isdigit() and len(value) > 50


def test_formula_empty(capsys):
    code, _, err = run(capsys, "formula", "g", "--a", "")
    assert code == 2


@pytest.mark.parametrize("check, trials, seed", [("t1", 50, 7), ("t3", 1000, 1), ("matrix-tree", 100, 3), ("t4", 30, 2)])
def test_verify_passes(capsys, check, trials, seed):
    code, out, _ = run(capsys, "verify", check, "--trials", str(trials), "--seed", str(seed), "--json")
    report = json.loads(out)
    assert code == 0
    assert report["result"] == {"passed": trials, "failed": 0, "failure_seeds": []}
    assert report["trials"] == trials and report["failures"] == []


def test_verify_failure_exit_code(capsys, monkeypatch):
    from sandpilegroups import verify

    monkeypatch.setitem(verify.CHECKS, "t3", lambda seed: seed % 2 == 0)
    code, out, _ = run(capsys, "verify", "t3", "--trials", "4", "--seed", "0", "--json")
    report = json.loads(out)
    assert code == 1
    assert report["result"]["failed"] == 2
    assert report["result"]["failure_seeds"] == [1, 3]


def test_verify_rejects_zero_trials(capsys):
    code, _, err = run(capsys, "verify", "t3", "--trials", "0")
    assert code == 2


def test_deterministic_reports(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "verify", "t1", "--trials", "5", "--seed", "11", "--json")
        outs.append(out)
    assert outs[0] == outs[1]


def test_json_report_types(capsys, c5):
    reports = []
    for argv in (["group", c5], ["formula", "f", "--a", "3,4"], ["verify", "t3", "--trials", "3"]):
        _, out, _ = run(capsys, *argv, "--json")
        reports.append(json.loads(out))
    group, formula, verify = reports
    assert all(isinstance(f, str) for f in group["result"]["factors"])
    assert isinstance(group["result"]["order"], str)
    assert isinstance(formula["result"]["value"], str)
    assert isinstance(verify["result"]["passed"], int)
    assert all({"command", "inputs", "result"} <= set(r) for r in reports)


def test_module_entry_point(c5):
    proc = subprocess.run([sys.executable, "-m", "sandpilegroups", "group", c5], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("C_5")
