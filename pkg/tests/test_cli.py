from __future__ import annotations

import json

import pytest

from netopt.cli import EXIT_ERROR, EXIT_INFEASIBLE, EXIT_OK, dispatch, main


def run(capsys, *argv):
    rc = main(["--quiet" if a == "@q" else a for a in argv])
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def files(tmp_path):
    def put(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return put


def test_backup_triangle_check(capsys, files):
    g = files("tri.g", "3 3\n0 1 1\n1 2 1\n0 2 3\n")
    rc, out, err = run(capsys, "backup", "--graph", g, "--src", "0", "--strategy", "bottom_up", "--check")
    assert rc == EXIT_OK
    assert out.splitlines() == ["1 4 0 2 1", "2 3 0 2", "check: ok (naive)"]
    assert err.startswith("time_us ")


def test_kregular_cycle(capsys):
    rc, out, _ = run(capsys, "kregular", "--n", "7", "--k", "2", "--check", "@q")
    lines = out.splitlines()
    assert rc == EXIT_OK and lines[0] == "7 7"
    deg = [0] * 7
    for row in lines[1:8]:
        u, v = map(int, row.split()[:2])
        deg[u] += 1
        deg[v] += 1
    assert deg == [2] * 7
    assert lines[-1].startswith("check: ok")


def test_cover_two_points(capsys, files):
    p = files("p.txt", "0 1 1\n10 -1 1\n")
    rc, out, _ = run(capsys, "cover", "--points", p, "--L", "2", "--K", "1", "--check", "@q")
    assert rc == EXIT_OK
    assert out.splitlines()[0] == "te 4/1"
    assert "check: ok" in out


def test_cover_infeasible_exit_code(capsys, files):
    p = files("p.txt", "0 -1 1\n10 1 1\n")
    rc, out, _ = run(capsys, "cover", "--points", p, "--L", "2", "--K", "1", "@q")
    assert rc == EXIT_INFEASIBLE and out == "infeasible\n"


def test_retarget_and_treedec(capsys, files):
    g = files("g", "2 1\n0 1 5\n")
    t = files("t", "1 3\n")
    rc, out, _ = run(capsys, "retarget", "--graph", g, "--targets", t, "--check", "@q")
    assert rc == EXIT_OK and out.splitlines()[0] == "cost 2"
    assert "check: ok" in out
    tr = files("tree", "3 2\n0 1 5\n1 2 5\n")
    rc, out, _ = run(capsys, "treedec", "--tree", tr, "--budget", "4", "--strategy", "unit", "--check", "@q")
    assert rc == EXIT_OK
    assert out.splitlines()[:2] == ["maxdist 6", "cost 4"]


def test_design3_and_cluster(capsys, files):
    lab = files("lab", "3\n0 1 1\n0 2 2\n1 2 3\n")
    rc, out, _ = run(capsys, "design3", "--labels", lab, "--check", "@q")
    assert rc == EXIT_OK and out.splitlines()[0] == "# labels 2"
    inst = files("inst", "3 1 2 1 sum sum\nweights\n1\n2\n3\n")
    rc, out, _ = run(capsys, "cluster", "--instance", inst, "--check", "@q")
    assert rc == EXIT_OK and out.splitlines()[0] == "8"
    assert out.splitlines()[-1] == "check: ok (enumeration)"


def test_unknown_strategy_lists_valid(capsys, files):
    g = files("g", "2 1\n0 1 1\n")
    rc, _, err = run(capsys, "backup", "--graph", g, "--strategy", "magic")
    assert rc == EXIT_ERROR
    assert "valid: naive" in err and "segtree_lists" in err


def test_malformed_file_names_line(capsys, files):
    g = files("g", "3 2\n0 1 1\n0 9 1\n")
    rc, _, err = run(capsys, "backup", "--graph", g)
    assert rc == EXIT_ERROR and "line 3" in err
    inst = files("inst", "2 1 0 sum sum\nweights\n1\nzz\n")
    rc, _, err = run(capsys, "cluster", "--instance", inst)
    assert rc == EXIT_ERROR and "line 4" in err


def test_missing_file_and_bad_args(capsys):
    rc, _, err = run(capsys, "backup", "--graph", "/nonexistent/x")
    assert rc == EXIT_ERROR and "cannot read" in err
    rc, _, _ = run(capsys, "kregular", "--n", "5", "--k", "3")
    assert rc == EXIT_ERROR
    rc, _, _ = run(capsys, "frobnicate")
    assert rc == EXIT_ERROR


def test_json_payload(capsys, files):
    p = files("p.txt", "0 1 1\n10 -1 1\n")
    rc, out, _ = run(capsys, "cover", "--points", p, "--L", "2", "--K", "1", "--json", "--check", "@q")
    doc = json.loads(out)
    assert rc == EXIT_OK
    assert doc["result"] == {"te": "4"} and doc["status"] == "ok"
    assert doc["check"]["match"] is True
    rc, out, _ = run(capsys, "backup", "--graph", "/nonexistent/x", "--json", "@q")
    assert json.loads(out)["status"] == "error"


@pytest.mark.parametrize("argv", [
    ["backup", "--random", "30", "--check"],
    ["retarget", "--random", "6", "--check"],
    ["treedec", "--random", "8", "--check"],
    ["design3", "--random", "7", "--check"],
    ["cluster", "--random", "12", "--check"],
    ["cluster", "--random", "20", "--strategy", "deque", "--check"],
    ["cover", "--random", "15", "--K", "3", "--check"],
])
def test_random_runs_are_reproducible_and_checked(capsys, monkeypatch, argv):
    monkeypatch.delenv("NETOPT_SEED", raising=False)
    a = run(capsys, *argv, "--seed", "9", "@q")
    b = run(capsys, *argv, "--seed", "9", "@q")
    assert a == b
    assert a[0] in (EXIT_OK, EXIT_INFEASIBLE)
    assert "MISMATCH" not in a[1]
    monkeypatch.setenv("NETOPT_SEED", "9")
    assert run(capsys, *argv, "@q") == a


def test_seed_changes_instance():
    a = dispatch(["backup", "--random", "20", "--seed", "1"])
    b = dispatch(["backup", "--random", "20", "--seed", "2"])
    assert a.digest != b.digest


def test_bad_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("NETOPT_SEED", "abc")
    rc, _, err = run(capsys, "backup", "--random", "5")
    assert rc == EXIT_ERROR and "NETOPT_SEED" in err


def test_report_quick_writes_figures(capsys, tmp_path):
    out = tmp_path / "rep"
    rc, text, _ = run(capsys, "report", "--out", str(out), "--quick", "--only", "design", "@q")
    assert rc == EXIT_OK
    names = {p.name for p in out.iterdir()}
    assert {"design_gaps.csv", "design_gaps.png"} <= names
    assert "wrote" in text
    header = (out / "design_gaps.csv").read_text().splitlines()[0]
    assert "," in header
