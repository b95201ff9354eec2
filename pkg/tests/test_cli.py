"""CLI surface: wire formats, exit codes, and file output."""

import csv
import io
import json

from orbitfusion import Report, ScanSpec, Violation
from orbitfusion.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_product_json_example(capsys):
    code, out, _ = run_cli(
        capsys, "product", "--modulus", "2", "--level", "2", "--a", "1,1", "--b", "1,1"
    )
    assert code == 0
    assert json.loads(out) == {"(2,0)": 1, "(0,2)": 1}


def test_product_text_mentions_both_orbits(capsys):
    code, out, _ = run_cli(
        capsys,
        "product", "--modulus", "3", "--level", "3",
        "--a", "1,1,1", "--b", "1,1,1", "--format", "text",
    )
    assert code == 0
    assert "3*(1,1,1)" in out


def test_product_methods_agree_on_the_wire(capsys):
    outputs = set()
    for method in ("definition", "list", "blockwise"):
        code, out, _ = run_cli(
            capsys,
            "product", "--modulus", "3", "--level", "3",
            "--a", "1,1,1", "--b", "2,1,0", "--method", method,
        )
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_fusion_example(capsys):
    code, out, _ = run_cli(
        capsys,
        "fusion", "--modulus", "2", "--level", "1",
        "--lambda", "1", "--mu", "1", "--nu", "0",
    )
    assert code == 0
    assert json.loads(out) == 1


def test_fusion_debug_raw(capsys):
    code, out, _ = run_cli(
        capsys,
        "fusion", "--modulus", "2", "--level", "1",
        "--lambda", "1", "--mu", "1", "--nu", "0", "--debug-raw",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficient"] == 1
    assert abs(payload["raw_re"] - 1) < 1e-6


def test_orbits_listing(capsys):
    code, out, _ = run_cli(capsys, "orbits", "--modulus", "2", "--level", "3")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4
    assert {"label": [2, 1], "size": 3} in rows


def test_orbits_single_label_elements(capsys):
    code, out, _ = run_cli(
        capsys, "orbits", "--modulus", "2", "--level", "3", "--label", "2,1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 3
    assert payload["elements"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_orbits_text_shows_standard_forms(capsys):
    code, out, _ = run_cli(
        capsys, "orbits", "--modulus", "3", "--level", "2", "--format", "text"
    )
    assert code == 0
    assert "standard form" in out


def test_verify_json_clean_scan(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--kind", "multiplicity-free", "--modulus", "3", "--kmax", "2",
        "--threads", "1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["violations"] == []
    assert payload["passed"] is True
    assert payload["cases_checked"] > 0
    assert isinstance(payload["elapsed_ms"], int)


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--kind", "algorithm-equivalence", "--modulus", "2", "--kmax", "2",
        "--format", "csv", "--threads", "1",
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "a", "b", "c", "lhs", "rhs", "status"]
    assert rows[-1][0] == "summary"
    assert rows[-1][-1] == "pass"


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys,
        "verify", "--kind", "orbit-monotone", "--modulus", "2", "--kmax", "2",
        "--out", str(target), "--threads", "1",
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["kind"] == "orbit-monotone"
    assert payload["violations"] == []


def test_verify_exit_one_on_violations(capsys, monkeypatch):
    spec = ScanSpec("multiplicity-free", 2, 1)
    fake = Report(spec, 1, [Violation(1, (1, 1), (1, 1), (2, 0), 2, 1)], [], 0.0)
    monkeypatch.setattr("orbitfusion.cli.run_scan", lambda s, threads=1: fake)
    code, out, _ = run_cli(
        capsys, "verify", "--kind", "multiplicity-free", "--modulus", "2", "--kmax", "1"
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["passed"] is False
    assert payload["violations"][0]["lhs"] == 2


def test_usage_errors_exit_two(capsys):
    code, _, err = run_cli(capsys, "product", "--modulus", "2", "--level", "2", "--a", "1,1")
    assert code == 2
    code, _, err = run_cli(
        capsys, "product", "--modulus", "2", "--level", "2", "--a", "1,1", "--b", "1"
    )
    assert code == 2
    assert "error" in err
    code, _, err = run_cli(
        capsys, "product", "--modulus", "2", "--level", "2", "--a", "1,1", "--b", "x,y"
    )
    assert code == 2
    code, _, err = run_cli(capsys, "verify", "--kind", "bogus", "--modulus", "2", "--kmax", "1")
    assert code == 2


def test_bound_exceeded_exits_three(capsys, monkeypatch):
    monkeypatch.setenv("ORBIT_FUSION_ENUM_CAP", "1")
    code, _, err = run_cli(
        capsys,
        "product", "--modulus", "2", "--level", "4",
        "--a", "2,2", "--b", "2,2", "--method", "definition",
    )
    assert code == 3
    assert "cap" in err


def test_help_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0
