import json
import subprocess
import sys

import pytest

from fockent.cli import doubling_grid, fmt, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_double_split_single(capsys):
    code, out, _ = run(["analyze", "(|0,1>+|1,0>)^2", "--stats", "boson", "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == "1"
    res = doc["results"]
    assert res["E_M"] == pytest.approx(2)
    assert res["S_single"] == pytest.approx(1)
    assert res["E_P"] == pytest.approx(0.5)
    assert res["QC_fermion"] is None


def test_analyze_fermion_product(capsys):
    code, out, _ = run(["analyze", "|1,1>", "--stats", "fermion", "--json"], capsys)
    res = json.loads(out)["results"]
    assert code == 0
    assert (res["E_M"], res["S_single"], res["QC_fermion"], res["E_P"]) == (0, 1, 0, 0)


def test_analyze_human_output(capsys):
    code, out, _ = run(["analyze", "|0,1>+|1,0>"], capsys)
    assert code == 0
    assert "E_M      1\n" in out
    assert "S_b      −" in out


def test_analyze_syntax_error(capsys):
    code, _, err = run(["analyze", "|2,>"], capsys)
    assert code == 2
    assert "offset 3" in err


def test_analyze_domain_error(capsys):
    code, _, err = run(["analyze", "|2,0>", "--stats", "fermion"], capsys)
    assert code == 3
    assert err


def test_table1_passes(capsys):
    code, out, _ = run(["table1", "--json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["pass"]
    rows = doc["results"]["rows"]
    assert len(rows) == 7
    skipped = [r["state"] for r in rows if not r["fermion_valid"]]
    assert skipped == ["|0,2>+|2,0>", "|0,2>+sqrt(2)|1,1>+|2,0>"]


def test_table1_tampered_expected_file(tmp_path, capsys):
    from fockent.table1 import load_expected

    rows = load_expected()
    rows[2]["E_P"] = "1"
    path = tmp_path / "expected.json"
    path.write_text(json.dumps({"rows": rows}))
    code, out, _ = run(["table1", "--expected", str(path)], capsys)
    assert code == 1
    assert "FAIL E_P" in out


def test_table1_dash_must_stay_undefined(tmp_path, capsys):
    from fockent.table1 import load_expected

    rows = load_expected()
    rows[0]["S_b"] = "0"
    path = tmp_path / "expected.json"
    path.write_text(json.dumps({"rows": rows}))
    assert run(["table1", "--expected", str(path)], capsys)[0] == 1


def test_scan_small(capsys):
    code, out, _ = run(["scan", "--max-n", "2", "--json"], capsys)
    rows = json.loads(out)["results"]["rows"]
    assert code == 0
    assert [r["N"] for r in rows] == [1, 2]
    assert rows[0]["exact"] == 0 and rows[1]["exact"] == 0.5


def test_scan_single_row(capsys):
    rows = json.loads(run(["scan", "--max-n", "1", "--json"], capsys)[1])["results"]["rows"]
    assert len(rows) == 1 and rows[0]["exact"] == 0


def test_scan_256_close_to_asymptote(capsys):
    rows = json.loads(run(["scan", "--max-n", "256", "--json"], capsys)[1])["results"]["rows"]
    assert rows[-1]["N"] == 256
    assert abs(rows[-1]["difference"]) < 0.02


def test_doubling_grid():
    assert doubling_grid(1) == [1]
    assert doubling_grid(8) == [1, 2, 4, 8]
    assert doubling_grid(10) == [1, 2, 4, 8, 10]


def test_superadd_split_singles(capsys):
    code, out, _ = run(["superadd", "|0,1>+|1,0>", "|0,1>+|1,0>", "--json"], capsys)
    res = json.loads(out)["results"]
    assert code == 0
    assert res["lhs"] == 0.5 and res["rhs"] == 0
    assert res["equality_predicted"] is False


def test_superadd_zero_variance(capsys):
    code, out, _ = run(["superadd", "|1,1>", "|0,1>+|1,0>", "--json"], capsys)
    res = json.loads(out)["results"]
    assert code == 0
    assert res["gap"] == 0 and res["equality_predicted"] is True


def test_superadd_double(capsys):
    res = json.loads(run(["superadd", "(|0,1>+|1,0>)^2", "(|0,1>+|1,0>)^2", "--json"], capsys)[1])["results"]
    assert res["lhs"] == pytest.approx(1.969361, abs=1e-6)


def test_superadd_random_survey_records_seed(capsys):
    code, out, _ = run(["superadd", "--pairs", "20", "--seed", "11", "--stats", "fermion", "--json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["seed"] == 11
    assert len(doc["results"]["reports"]) == 20


def test_superadd_parse_error(capsys):
    assert run(["superadd", "|0,1>", "|0"], capsys)[0] == 2


def test_json_is_deterministic(capsys):
    argv = ["superadd", "--pairs", "10", "--seed", "3", "--json"]
    first = run(argv, capsys)[1]
    second = run(argv, capsys)[1]
    assert first == second
    json.loads(first)


def test_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(["analyze", "|1,1>", "--json", "--output", str(path)], capsys)
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["results"]["E_M"] == 0


@pytest.mark.parametrize(
    "x, text",
    [(None, "−"), (0.5, "1/2"), (1.5, "3/2"), (2.0, "2"), (1 / 16, "1/16"), (0.1234567, "0.123457"), (1e-12, "0")],
)
def test_fmt(x, text):
    assert fmt(x) == text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fockent", "table1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "ALL PASS" in proc.stdout


def test_json_keeps_full_precision(capsys):
    from fockent.asymptotics import ep_split_singles_exact

    rows = json.loads(run(["scan", "--max-n", "4", "--json"], capsys)[1])["results"]["rows"]
    assert rows[-1]["exact"] == ep_split_singles_exact(4)
