import io
import json

import pytest

from conftest import HAMMING_7_4
from qecc_bounds.cli import run
from qecc_bounds.codes import code_from_rows, dual
from qecc_bounds.galois import field_make, parse_matrix
from qecc_bounds.scan import ScanReport


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def steane_files(tmp_path):
    f = field_make(2)
    H = code_from_rows(f, HAMMING_7_4)
    c1, c2 = tmp_path / "c1.txt", tmp_path / "c2.txt"
    c1.write_text(dual(H).gen.to_text())
    c2.write_text(H.gen.to_text())
    return str(c1), str(c2)


def test_check_steane():
    code, out, _ = call("check", "--n", "7", "--k", "1", "--d", "3", "--q", "2", "--css")
    assert code == 0
    data = json.loads(out)
    assert all(v["satisfied"] for v in data["verdicts"] if v["applicable"])
    assert data["classification"]["category"] == "SATISFIES_HAMMING"
    assert data["verdicts"][0]["lhs"] == "44" and data["verdicts"][0]["rhs"] == "128"


def test_check_structural():
    code, out, _ = call("check", "--n", "5", "--k", "3", "--d", "3", "--q", "3", "--css")
    assert code == 1
    data = json.loads(out)
    assert data["classification"]["chain"][-1] == "IMPOSSIBLE_CSS_STRUCTURAL"


def test_check_big_K_and_formats():
    K = str(7**40 + 3)
    code, out, _ = call("check", "--n", "60", "--K", K, "--d", "5", "--q", "7")
    data = json.loads(out)
    assert data["params"]["K"] == K and data["params"]["k"] is None
    assert isinstance(data["verdicts"][0]["lhs"], str)
    code, out, _ = call("check", "--n", "7", "--k", "1", "--d", "3", "--q", "2", "--format", "human")
    assert "quantum_hamming: 44 <= 128 : OK" in out
    code, out, _ = call("check", "--n", "7", "--k", "1", "--d", "3", "--q", "2", "--format", "tsv")
    assert out.splitlines()[0].startswith("name\tapplicable")


@pytest.mark.parametrize("argv", [
    ["check", "--n", "7", "--d", "3", "--q", "2", "--bogus"],
    ["check", "--n", "7", "--d", "3", "--q", "2"],
    ["check", "--n", "7", "--k", "1", "--K", "2", "--d", "3", "--q", "2"],
    ["check", "--n", "7", "--K", "3", "--d", "3", "--q", "2", "--css"],
    ["check", "--n", "0", "--k", "1", "--d", "3", "--q", "2"],
    ["frobnicate"],
    [],
    ["scan", "--n-max", "500", "--q", "2"],
    ["oracle", "--q", "7"],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert len(err.strip().splitlines()) == 1


def test_table1():
    code, out, _ = call("table1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[1].split("\t")[1:] == ["0.605", "0.340", "0.218", "0.152", "0.111", "0.085", "0.068", "0.055", "0.045"]
    code, out, _ = call("table1", "--format", "json")
    assert json.loads(out)[4] == {"q": 7, "delta": "0.111", "one_minus_delta": "0.889"}


def test_derive(steane_files, tmp_path):
    c1, c2 = steane_files
    code, out, _ = call("derive", c1, c2, "--out-dir", str(tmp_path / "out"))
    assert code == 0
    data = json.loads(out)
    assert data["report"]["lemma1_holds"] is True
    D = parse_matrix(data["D"]["generator"])
    assert D.cols == 4 and D.rows == 1
    assert parse_matrix((tmp_path / "out" / "Dprime.txt").read_text()).cols == 4
    code, out, _ = call("derive", c1, c2, "--format", "human")
    assert "# lemma1_holds: True" in out


def test_css_verify(steane_files):
    c1, c2 = steane_files
    code, out, _ = call("css-verify", c1, c2)
    data = json.loads(out)
    assert code == 0 and data["params"]["d"] == 3 and data["status"] == "pass"
    code, out, err = call("css-verify", c2, c1)
    assert code == 2 and "subcode" in err


def test_matrix_errors(tmp_path, steane_files):
    bad = tmp_path / "bad.txt"
    bad.write_text("q=2^1 modulus=0,1\n1 0 1\n1 1\n")
    code, _, err = call("derive", str(bad), steane_files[1])
    assert code == 2 and len(err.splitlines()) == 1
    code, _, err = call("derive", str(tmp_path / "missing.txt"), steane_files[1])
    assert code == 2


def test_budget_flag_and_env(steane_files, monkeypatch):
    c1, c2 = steane_files
    code, _, err = call("derive", c1, c2, "--budget", "4")
    assert code == 2 and "work limit" in err
    monkeypatch.setenv("QECC_BOUNDS_BUDGET", "4")
    code, _, err = call("css-verify", c1, c2)
    assert code == 2 and "work limit" in err


def test_scan_output_stable(tmp_path):
    argv = ["scan", "--n-max", "8", "--q", "2", "3", "4"]
    a, b = call(*argv), call(*argv)
    assert a == b and a[0] == 0
    rep = ScanReport.from_dict(json.loads(a[1]))
    assert rep.to_dict(timing=False) == json.loads(a[1])
    fig = tmp_path / "scan.png"
    code, out, _ = call(*argv, "--format", "tsv", "--figure", str(fig))
    assert fig.stat().st_size > 0
    assert "5\t2\t3\t2\tFalse" in out.splitlines()


def test_table1_figure(tmp_path):
    fig = tmp_path / "t1.png"
    code, _, _ = call("table1", "--figure", str(fig))
    assert code == 0 and fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_oracle_cli():
    code, out, _ = call("oracle", "--q", "2", "--n-max", "3")
    data = json.loads(out)
    assert code == 0 and data["ok"] and "runtime" not in data
    code, out, _ = call("oracle", "--q", "2", "--n-max", "3", "--distance-offset", "1")
    assert code == 1 and json.loads(out)["failures"]
