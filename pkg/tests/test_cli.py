import io
import json
import shutil
import subprocess

import numpy as np
import pytest

from circone.cli import main, spc_enum_main

MU_HALF = json.dumps({"a": [1, 1, 1], "b": [1, 1, 1], "c": [1, 1, 1]})
MU_ENTANGLED = json.dumps({"a": [0.4, 1, 0.04], "b": [0.4, 0.4, 0.4], "c": [0.4, 0.4, 0.4]})
NOT_PSD = json.dumps({"a": [1, 1, 1], "b": [1, 2, 2], "c": [1, 0, 0]})
TURA = [[1, 1, 0, 0, 1], [1, 2, 1, 0, 0], [0, 1, 2, 1, 0], [0, 0, 1, 1, 1], [1, 0, 0, 1, 3]]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ppt_and_psd_exit_codes(capsys):
    code, out, _ = run(capsys, "ppt", "--triple", MU_HALF)
    assert code == 0 and json.loads(out)["verdict"] == "Member"
    code, out, _ = run(capsys, "psd", "--triple", NOT_PSD)
    assert code == 1 and json.loads(out)["verdict"] == "NotMember"


def test_sep_routes(capsys):
    code, out, _ = run(capsys, "sep", "--triple", MU_HALF)
    assert code == 0 and json.loads(out)["certificate"]["kind"] == "sep_decomposition"
    code, out, _ = run(capsys, "sep", "--triple", MU_ENTANGLED)
    assert code == 1
    # symmetric two-excitation mixture at d = 5, PPT but not separable
    a = [2 * np.cos(np.pi / 5), 1, 0, 0, 1]
    dicke = json.dumps({"a": a, "b": [a[0], 0, 0, 0, 0], "c": a})
    code, out, _ = run(capsys, "sep", "--triple", dicke)
    assert code == 1 and json.loads(out)["certificate"]["pairing"] < 0


def test_spectrum_output(capsys):
    code, out, _ = run(capsys, "spectrum", "--triple", MU_HALF)
    assert code == 0
    ev = json.loads(out)["eigenvalues"]
    assert len(ev) == 9


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(MU_HALF))
    code, out, _ = run(capsys, "ppt", "--triple", "-")
    assert code == 0


def test_file_input(capsys, tmp_path):
    f = tmp_path / "t.json"
    f.write_text(json.dumps({"triple": json.loads(NOT_PSD)}))
    code, _, _ = run(capsys, "ppt", "--triple", str(f))
    assert code == 1


def test_input_errors(capsys):
    assert run(capsys, "ppt", "--triple", "{not json")[0] == 3
    assert run(capsys, "ppt", "--triple", json.dumps({"a": [1, 2], "b": [2, 0], "c": [1, 0]}))[0] == 3
    assert run(capsys, "frobnicate")[0] == 3
    assert run(capsys, "ppt")[0] == 3
    assert run(capsys, "reproduce", "no-such-target")[0] == 3
    assert run(capsys, "--tol", "0.1", "ppt", "--triple", MU_HALF)[0] == 3
    assert run(capsys, "ppt", "--triple", MU_HALF, "--tol", "-1")[0] == 3
    assert run(capsys, "cones", "member", "--cone", "cp", "--vec", "[1, 2, 3]")[0] == 3
    assert run(capsys, "cones", "member", "--cone", "cp", "--vec", "[2, 1, 0, 0, 1]", "--d", "4")[0] == 3
    code, _, err = run(capsys, "dicke", "check", "--p", json.dumps([[1, 2], [1, 1]]))
    assert code == 3 and "circulant" in err


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_env_tolerance(capsys, monkeypatch):
    monkeypatch.setenv("CIRCONE_TOL", "1e-6")
    _, out, _ = run(capsys, "ppt", "--triple", MU_HALF)
    assert json.loads(out)["tol"] == 1e-6
    _, out, _ = run(capsys, "ppt", "--triple", MU_HALF, "--tol", "1e-8")
    assert json.loads(out)["tol"] == 1e-8
    monkeypatch.setenv("CIRCONE_TOL", "abc")
    assert run(capsys, "ppt", "--triple", MU_HALF)[0] == 3


def test_cones_member(capsys):
    code, out, _ = run(capsys, "cones", "member", "--cone", "cp", "--vec", "[9, 5, 0, 0, 5]")
    assert code == 1 and json.loads(out)["certificate"]["vector"] == pytest.approx([1, -1, 1, 1, -1])
    code, out, _ = run(capsys, "cones", "member", "--cone", "cp", "--vec", json.dumps({"vector": [2, 1, 0, 0, 1]}))
    assert code == 0
    assert run(capsys, "cones", "member", "--cone", "dnn", "--vector", "[1, 1, 0, 0, 1]")[0] == 1
    assert run(capsys, "cones", "member", "--cone", "cop", "--vec", "[1, -1, 1, 1, -1]")[0] == 0
    assert run(capsys, "cones", "member", "--cone", "spn", "--vec", "[1, -1, 1, 1, -1]")[0] == 1


def test_catalogs(capsys):
    code, out, _ = run(capsys, "catalog", "--cone", "dnn", "--d", "5")
    assert code == 0 and len(json.loads(out)["rays"]) == 4
    code, out, _ = run(capsys, "cones", "catalog", "--cone", "cp5", "--theta-samples", "3")
    assert code == 0 and len(json.loads(out)["rays"]) == 4 + 2 * 3
    assert run(capsys, "catalog", "--cone", "psd")[0] == 3
    code, out, _ = run(capsys, "catalog", "--cone", "spn5", "--format", "csv")
    assert code == 0 and out.startswith("label,extremal,vector")


def test_enum_and_spc_entry(capsys):
    m = json.dumps([[1, -1], [0, 1]])
    code, out, _ = run(capsys, "enum", "--matrix", m)
    assert code == 0 and [r["supp"] for r in json.loads(out)] == [[0], [0, 1]]
    code = spc_enum_main(["--matrix", m, "--table"])
    out = capsys.readouterr().out
    assert code == 0 and out.splitlines()[0].split()[0] == "supp" and len(out.splitlines()) == 3


def test_project(capsys):
    code, out, _ = run(capsys, "project", "--matrix", json.dumps(TURA))
    assert code == 1 and json.loads(out)["projected_times_d"] == pytest.approx([9, 5, 0, 0, 5])
    code, _, _ = run(capsys, "dicke", "detect-not-cp", "--matrix", json.dumps(np.eye(3).tolist()))
    assert code == 2


def test_verify_decomposition(capsys):
    dec = {"pairs": [{"v": [1, 1, 1], "w": [1, 1, 1]}]}
    good = json.dumps({"a": [3, 3, 3], "b": [3, 3, 3], "c": [3, 3, 3]})
    assert run(capsys, "verify", "--triple", good, "--decomp", json.dumps(dec))[0] == 0
    code, out, _ = run(capsys, "tcp", "verify", "--triple", MU_HALF, "--decomp", json.dumps(dec))
    assert code == 1 and json.loads(out)["worst"] is not None


def test_make_ppt_entangled(capsys):
    code, out, _ = run(capsys, "make-ppt-entangled", "--d", "3", "--alpha", "2")
    payload = json.loads(out)
    assert code == 0
    assert payload["triple"]["a"] == pytest.approx([1, 2, 0.5])
    assert payload["ppt"]["verdict"] == "Member" and payload["sep"]["verdict"] == "NotMember"
    assert run(capsys, "tcp", "make-ppt-entangled", "--d", "3", "--alpha", "1")[0] == 3


def test_tcp_sep_check(capsys):
    assert run(capsys, "tcp", "sep-check", "--triple", MU_HALF)[0] == 0
    assert run(capsys, "tcp", "sep-check", "--triple", MU_ENTANGLED)[0] == 1
    refused = json.dumps({"a": [1, 1, 1], "b": [1, 0.3, 0.3], "c": [1, 0.3, 0.3]})
    code, _, err = run(capsys, "tcp", "sep-check", "--triple", refused)
    assert code == 3 and "hypothesis" in err


def test_dicke_check(capsys):
    p = [[1, 1, 0, 0, 1], [1, 1, 1, 0, 0], [0, 1, 1, 1, 0], [0, 0, 1, 1, 1], [1, 0, 0, 1, 1]]
    code, out, _ = run(capsys, "dicke", "check", "--p", json.dumps(p))
    payload = json.loads(out)
    assert code == 1 and payload["ppt"]["verdict"] == "NotMember"
    row = np.array([2 * np.cos(np.pi / 5), 1, 0, 0, 1])
    p = np.array([np.roll(row, i) for i in range(5)])
    code, out, _ = run(capsys, "dicke", "check", "--p", json.dumps(p.tolist()))
    payload = json.loads(out)
    assert code == 1 and payload["ppt"]["verdict"] == "Member" and payload["sep"]["verdict"] == "NotMember"


def test_table_format(capsys):
    code, out, _ = run(capsys, "ppt", "--triple", MU_HALF, "--format", "table")
    assert code == 0 and out.startswith("ppt: Member")


def test_reproduce_target(capsys, tmp_path):
    code, out, _ = run(capsys, "reproduce", "dnn-table-d5")
    assert code == 0 and out.splitlines()[0] == "[PASS] dnn-table-d5"
    code, out, _ = run(capsys, "reproduce", "slice-d4", "--out", str(tmp_path))
    assert code == 0 and (tmp_path / "slice-d4.csv").read_text().startswith("series,x,y")


def test_slice(capsys):
    code, out, _ = run(capsys, "cones", "slice", "--figure", "d5dual", "--samples", "5")
    assert code == 0 and out.splitlines()[0] == "series,x,y"


def test_output_is_deterministic(capsys):
    first = run(capsys, "cones", "member", "--cone", "cp", "--vec", "[1, 0.3, 0.2, 0.2, 0.3]", "--seed", "4")
    second = run(capsys, "cones", "member", "--cone", "cp", "--vec", "[1, 0.3, 0.2, 0.2, 0.3]", "--seed", "4")
    assert first == second


@pytest.mark.skipif(shutil.which("circone") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["circone", "ppt", "--triple", MU_HALF], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["verdict"] == "Member"
