import json

import pytest

from rxtx.cli import main
from rxtx.scheme import (mutate_product_coefficient, rxtx_scheme,
                         scheme_to_text)


def test_verify_builtin(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "rxtx-4x4: 10/10 output identities verified" in out
    assert "strassen-2x2: 3/3 output identities verified" in out


def test_verify_scheme_file(tmp_path, capsys):
    path = tmp_path / "scheme.txt"
    path.write_text(scheme_to_text(rxtx_scheme()))
    assert main(["verify", "--scheme", str(path)]) == 0
    assert "10/10" in capsys.readouterr().out


def test_verify_broken_scheme_exits_1(tmp_path, capsys):
    bad = mutate_product_coefficient(rxtx_scheme(), 7, "right", 7, -1)
    path = tmp_path / "bad.txt"
    path.write_text(scheme_to_text(bad))
    assert main(["verify", "--scheme", str(path)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_count(capsys):
    assert main(["count", "--algo", "rxtx", "--metric", "mults",
                 "--n", "4"]) == 0
    assert capsys.readouterr().out.strip() == "34"
    assert main(["count", "--algo", "rxtx", "--metric", "ops",
                 "--n", "32", "--opt"]) == 0
    assert capsys.readouterr().out.strip() == "33264"


def test_count_rejects_bad_n():
    with pytest.raises(ValueError):
        main(["count", "--algo", "rxtx", "--metric", "mults", "--n", "12"])


def test_table_file_deterministic(tmp_path, capsys):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["table", "--max-exp", "3", "--out", str(p1)]) == 0
    assert main(["table", "--max-exp", "3", "--out", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    assert main(["table", "--max-exp", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].startswith("4,34,38,49,40,")


def test_bench_report(tmp_path, capsys):
    out = tmp_path / "bench.json"
    assert main(["bench", "--n", "32", "--reps", "2", "--seed", "0",
                 "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["config"]["n"] == 32
    assert len(report["reps"]) == 2
    for rep in report["reps"]:
        assert rep["rxtx_seconds"] > 0
        assert rep["rel_frobenius_deviation"] <= 1e-10
    assert "rxtx_median_seconds" in report["summary"]


def test_discover_random(tmp_path, capsys):
    scheme_out = tmp_path / "scheme.txt"
    report_out = tmp_path / "report.json"
    code = main(["discover", "--mode", "random", "--samples", "900",
                 "--seed", "1", "--out", str(scheme_out),
                 "--report", str(report_out)])
    assert code == 0
    report = json.loads(report_out.read_text())
    assert report["verified"]
    assert report["cover_size"] <= 6
    text = scheme_out.read_text()
    assert text.startswith("grid 2")


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--algo", "nonsense", "--n", "4"])
    assert exc.value.code == 2
