import json
import os
import subprocess
import sys

import pytest

from qsphere.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_act_left(capsys):
    code, out, _ = run(capsys, "act", "--side", "l", "--op", "X+", "--expr", "c")
    assert code == 0 and out.strip() == "as"


def test_act_right_json(capsys):
    code, out, _ = run(capsys, "act", "--side", "r", "--op", "E", "--expr", "c", "--json")
    data = json.loads(out)
    assert code == 0 and data["result"] == "a" and data["schema"] == 1


def test_d(capsys):
    code, out, _ = run(capsys, "d", "--expr", "a c")
    assert code == 0 and out.startswith("w+ *")


def test_parse_error_reports_offset(capsys):
    code, _, err = run(capsys, "d", "--expr", "a +")
    assert code == 2 and "offset 3" in err


def test_degree_cap(capsys):
    code, _, err = run(capsys, "act", "--side", "l", "--op", "E", "--expr", "a^4 c^4", "--degree-cap", "5")
    assert code == 3 and "degree cap" in err


def test_verify_algebra(capsys):
    code, out, _ = run(capsys, "verify", "algebra")
    assert code == 0 and "PASS" in out


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "framework", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass" and rep["schema"] == 1
    ids = [c["id"] for c in rep["cases"]]
    assert ids == sorted(ids)
    assert set(rep["cases"][0]) == {"id", "status", "residual", "millis"}


def test_lc_scalar_metric(capsys):
    code, out, _ = run(capsys, "lc", "--metric", os.path.join(DATA, "diag-scalar.json"), "--json")
    data = json.loads(out)
    assert code == 0
    assert data["report"]["status"] == "pass"
    assert set(data["connection"]["gamma"]) == {"+", "-", "z"}


def test_lc_with_params(capsys):
    code, out, _ = run(capsys, "lc", "--metric", os.path.join(DATA, "diag-q3-q.json"),
                       "--params", os.path.join(DATA, "free-params.json"))
    assert code == 0 and "lc: 2/2 cases pass" in out


def test_lc_rejects_bad_metric(capsys):
    code, _, err = run(capsys, "lc", "--metric", os.path.join(DATA, "not-hermitian.json"))
    assert code == 2 and "hermitian" in err


def test_lc_missing_file(capsys):
    code, _, err = run(capsys, "lc", "--metric", os.path.join(DATA, "missing.json"))
    assert code == 2 and "cannot read" in err


def test_projector_json(capsys):
    code, out, _ = run(capsys, "podles", "projector", "-n", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["n"] == 1
    assert data["entries"] == [["(-1) c cs + 1", "(q) as c"], ["a cs", "(q^2) c cs"]]
    assert all(data["checks"].values())


def test_relrvf_verb_reports_failure(capsys):
    code, out, _ = run(capsys, "podles", "verify-relrvf", "--mmax", "0", "--nmax", "0")
    assert code == 1 and "FAIL" in out


def test_unknown_flag():
    with pytest.raises(SystemExit) as info:
        main(["verify", "algebra", "--bogus"])
    assert info.value.code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "qsphere", "act", "--side", "l", "--op", "Xz", "--expr", "a"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "a"
