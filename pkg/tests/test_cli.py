import csv
import io
import json
import subprocess
import sys

import pytest

from liemult import cli
from liemult.rootsystem import InternalConsistencyError


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_mult_example():
    assert call("mult", "--type", "C3", "--highest", "0,1,0", "--weight", "0,0,0")[:2] == (0, "2\n")


def test_dim_example():
    assert call("dim", "--type", "F4", "--highest", "0,0,0,1")[:2] == (0, "26\n")


def test_orbit():
    assert call("orbit", "--type", "A2", "--weight", "1,1")[:2] == (0, "6\n")
    # non-dominant input goes through its dominant representative
    assert call("orbit", "--type", "A2", "--weight=-1,2")[:2] == (0, "6\n")


def test_profile_text_layout():
    code, out, _ = call("profile", "--type", "C5", "--highest", "0,0,0,0,1")
    assert code == 0
    header, _, row = out.splitlines()
    assert header.split() == ["type", "highest", "weight", "n1", "n2", "dimension"]
    assert row.split() == ["C5", "(0,0,0,0,1)", "112", "10", "132"]


def test_profile_csv_columns():
    code, out, _ = call("profile", "--type", "A3", "--highest", "0,3,0", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["type", "weight", "n1", "n2", "dim"], ["A3", "(0,3,0)", "38", "6", "50"]]


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_profile_json_round_trip(fmt):
    _, js, _ = call("profile", "--type", "G2", "--highest", "0,1", "--format", "json")
    doc = json.loads(js)
    assert cli.render_profile(doc, "json") + "\n" == js
    _, direct, _ = call("profile", "--type", "G2", "--highest", "0,1", "--format", fmt)
    assert cli.render_profile(doc, fmt) + "\n" == direct


def test_full_table_json():
    code, out, _ = call("mult", "--type", "A2", "--highest", "2,2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    entries = {tuple(mu): m for mu, m in doc["entries"]}
    assert entries[(0, 0)] == 3 and entries[(2, 2)] == 1


def test_restrict():
    code, out, _ = call("restrict", "--type", "F4", "--highest", "0,0,0,1", "--levi", "1,2,3",
                        "--format", "json")
    assert code == 0
    [c] = json.loads(out)["components"]
    assert c["type"] == "B3" and c["weight"] == [0, 0, 0]
    code, out, _ = call("restrict", "--type", "C5", "--highest", "2,0,0,0,0",
                        "--base", "1,1,1,0,0;0,0,0,1,0;0,0,0,0,1", "--format", "json")
    assert code == 0
    [c] = json.loads(out)["components"]
    assert c["type"] == "C3" and c["weight"] == [2, 0, 0]


def test_classify_json():
    code, out, _ = call("classify", "--type", "C2", "--bound", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["omega2_prime"] == [[0, 2], [0, 3], [1, 1], [2, 0], [3, 0]]


def test_verify_table1_status_tracks_unannotated_diffs():
    code, out, _ = call("verify", "table1", "--bound", "4", "--format", "json")
    doc = json.loads(out)
    assert doc["statement"] == "verified within coordinate-sum bound 4 only"
    assert code == (0 if not doc["unannotated_diffs"] else 1)
    assert doc["ok"] == (code == 0)


def test_verify_table2_and_quick_suites():
    assert call("verify", "table2", "--bound", "3")[0] == 0
    assert call("verify", "a2", "--a-max", "5", "--grid-max", "3")[0] == 0
    code, out, _ = call("verify", "lemmas", "--quick", "--format", "json")
    assert code == 0
    assert all(not v["failures"] for v in json.loads(out).values())


@pytest.mark.parametrize("argv", [
    ["mult", "--type", "C3", "--highest", "0,1"],
    ["mult", "--type", "Q3", "--highest", "0,1,0"],
    ["mult", "--type", "A2", "--highest", "1,x"],
    ["mult", "--type", "A2", "--highest", "-1,1"],
    ["dim", "--type", "D3", "--highest", "0,0,0"],
    ["restrict", "--type", "C3", "--highest", "0,1,0", "--levi", "1,2,3"],
    ["restrict", "--type", "C3", "--highest", "0,1,0", "--base", "2,0,0"],
    ["classify", "--type", "C2", "--k", "3"],
    ["bogus"],
])
def test_usage_errors(argv, capsys):
    code, _, _ = call(*argv)
    assert code == 2


def test_internal_consistency_exit_code(monkeypatch):
    def boom(*a, **k):
        raise InternalConsistencyError("non-integral quotient")

    monkeypatch.setattr(cli, "weyl_dimension", boom)
    code, _, err = call("dim", "--type", "A2", "--highest", "1,1")
    assert code == 3 and "internal consistency" in err


def test_deterministic_output():
    argv = ["verify", "table1", "--bound", "3", "--format", "json"]
    assert call(*argv)[1] == call(*argv)[1]
    argv = ["mult", "--type", "B3", "--highest", "1,1,1", "--format", "csv"]
    assert call(*argv)[1] == call(*argv)[1]


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "liemult.cli", "dim", "--type", "E8",
                        "--highest", "0,0,0,0,0,0,0,1"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "248\n"
