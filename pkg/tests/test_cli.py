import json
import subprocess
import sys

import pytest

from equilines import engine
from equilines.cli import EXIT_INPUT, EXIT_INVARIANT, EXIT_OK, _join_negative_values, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == EXIT_OK
    return json.loads(out)


def test_negative_values_joined():
    assert _join_negative_values(["lift", "--b", "-3/35", "--a", "1/20"]) == ["lift", "--b=-3/35", "--a", "1/20"]
    assert _join_negative_values(["--json", "-x"]) == ["--json", "-x"]


def test_lines(capsys):
    d = run_json(capsys, "lines", "--dim", "19", "--count", "76")
    assert d["conclusion"] == "NonexistenceCertified"
    assert [s["rule"] for s in d["steps"]][-1] == "SrgDatabase"
    code, out, _ = run(capsys, "lines", "--dim", "19", "--count", "75")
    assert code == EXIT_OK and "Open" in out


def test_lines_with_angle_and_monotone(capsys):
    d = run_json(capsys, "lines", "--dim", "19", "--count", "76", "--angle", "1/5", "--monotone")
    assert d["query"]["angle"] == "1/5" and d["conclusion"] == "NonexistenceCertified"


def test_srg_out_of_range_is_a_verdict(capsys):
    d = run_json(capsys, "srg", "5", "7", "0", "1")
    assert d["conclusion"] == "NonexistenceCertified"


def test_srg(capsys):
    d = run_json(capsys, "srg", "76", "30", "8", "14")
    assert d["conclusion"] == "NonexistenceCertified"
    code, out, _ = run(capsys, "srg", "10", "3", "0", "1")
    assert "ExistenceKnown" in out


def test_etf(capsys):
    d = run_json(capsys, "etf", "--dim", "19", "--count", "76")
    assert d["welch_angle"] == "1/5"
    assert d["waldron"]["primary"] == "srg(75,32,10,16)"
    assert d["complementary_etf"] == {"n": 57, "M": 76, "angle": "1/15"}


def test_project_and_lift(capsys):
    d = run_json(capsys, "project", "76", "35", "18", "14", "--eigenspace", "s")
    assert (d["dimension"], d["inner_a"], d["inner_b"]) == (56, "1/20", "-3/35")
    d = run_json(capsys, "lift", "--dim", "56", "--size", "76", "--a", "1/20", "--b", "-3/35")
    assert (d["angle"], d["s2"], d["h2"]) == ("1/15", "56/57", "1/57")


def test_table1_text(capsys):
    code, out, _ = run(capsys, "table1")
    assert code == EXIT_OK
    assert "(540,308,190,156) N" in out and out.count(" o") >= 8


def test_tight5(capsys):
    d = run_json(capsys, "tight5", "--m", "3")
    assert [1127, 640, 396, 320] in [m["srg"] for m in d["members"]]
    code, out, _ = run(capsys, "tight5", "--m", "4")
    assert "3159,1408,532,704" in out and "482944" in out


def test_verify_fixture(capsys, fixtures):
    d = run_json(capsys, "verify", "--adjacency", str(fixtures / "petersen.txt"), "--projection", "r")
    assert d["srg"] == "srg(10,3,0,1)" and d["report"]["numeric_rank"] == 5
    d = run_json(capsys, "verify", "--graph", "Cycle5", "--seidel-angle", "1/5*sqrt(5)")
    assert d["report"]["numeric_rank"] == 3 and d["report"]["verdicts"]["tight_frame"]


@pytest.mark.parametrize(
    "argv",
    [
        ["lines", "--dim", "1", "--count", "5"],
        ["lines", "--dim", "x", "--count", "5"],
        ["srg", "5", "x", "0", "1"],
        ["project", "10", "3", "0", "0", "--eigenspace", "r"],
        ["lift", "--dim", "5", "--size", "10", "--a", "1/2", "--b", "1/3"],
        ["tight5"],
        ["verify", "--adjacency", "/nonexistent/file", "--projection", "r"],
        ["bogus"],
    ],
)
def test_input_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_INPUT


def test_bad_adjacency(capsys, fixtures):
    code, _, err = run(capsys, "verify", "--adjacency", str(fixtures / "bad_entry.txt"), "--projection", "r")
    assert code == EXIT_INPUT and "(1, 2)" in err


def test_custom_db(capsys, tmp_path):
    path = tmp_path / "db.txt"
    path.write_text("75 32 10 16 O none\n")
    d = run_json(capsys, "--db", str(path), "lines", "--dim", "19", "--count", "76")
    assert d["conclusion"] == "Open"


def test_invariant_violation_exit_code(capsys, monkeypatch):
    real = engine.lines_verdict

    def tampered(*a, **kw):
        v = real(*a, **kw)
        v.steps[0].outputs["candidates"] = ["1/7"]
        return v

    monkeypatch.setattr("equilines.cli.lines_verdict", tampered)
    code, _, err = run(capsys, "lines", "--dim", "19", "--count", "76")
    assert code == EXIT_INVARIANT and "invariant" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "equilines", "lines", "--dim", "20", "--count", "96", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["conclusion"] == "NonexistenceCertified"
