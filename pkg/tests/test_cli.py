import json
import subprocess
import sys

import pytest

from skewlaurent.cli.harness import VerifyConfig, recompute_flags, run_verify
from skewlaurent.cli.main import main

SMALL = ["--trials", "4", "--prec", "16"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,expected", [
    (["eval", "t*u"], "(u+1)*t + O(t^32)"),
    (["comm", "t", "u"], "(u+1)/u + O(t^31)"),
    (["inv", "u*t"], "1/(u-1)*t^-1 + O(t^30)"),
    (["eval", "(1+t)^2", "--prec", "4"], "1 + 2*t + t^2 + O(t^4)"),
    (["eval", "t*w", "--field", "gf:2:2:1,1,1", "--sigma", "frobenius"], "(w+1)*t + O(t^32)"),
    (["comm", "t", "w", "--field", "gf:2:2:1,1,1", "--sigma", "frobenius"], "w + O(t^31)"),
])
def test_goldens(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize("argv,code", [
    (["eval", "t*"], 2),
    (["eval", "t", "--field", "gf:4:1:0,1"], 2),
    (["eval", "t", "--sigma", "twist"], 2),
    (["inv", "0"], 1),
    (["comm", "t", "0"], 1),
])
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == "" and err.startswith("skewlab:")


def test_verify_zero_trials_is_skipped(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "0")
    report = json.loads(out)
    assert code == 0
    assert {p["status"] for p in report["properties"].values()} == {"skipped"}


def test_verify_small_run_and_figure(capsys, tmp_path):
    code, out, err = run(capsys, "verify", *SMALL, "--figures-dir", str(tmp_path))
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert (tmp_path / "valuations.png").stat().st_size > 0
    assert "overall: PASS" in err
    assert [v["kind"] for v in report["span_verdicts"]] == ["NOT_IN_SPAN_OBSTRUCTION"] * 3


def test_verify_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "--prec", "4")
    assert code == 2


def strip_timing(report):
    return {k: v for k, v in report.items() if k != "timing"}


def test_report_is_deterministic_and_self_checking():
    cfg = lambda: VerifyConfig(prec=16, seed=9).with_all_trials(5)  # noqa: E731
    a, b = run_verify(cfg()), run_verify(cfg())
    assert json.dumps(strip_timing(a), sort_keys=True) == json.dumps(strip_timing(b), sort_keys=True)
    assert recompute_flags(a) == {k: p["status"] for k, p in a["properties"].items()}


def test_recompute_flags_catches_tampering():
    report = run_verify(VerifyConfig(prec=16).with_all_trials(3))
    report["properties"]["commutator_kernel"]["data"]["valuations"][0] = -1
    report["span_verdicts"][0]["target_valuation"] = 0
    flags = recompute_flags(report)
    assert flags["commutator_kernel"] == "fail"
    assert flags["codimension_witness"] == "fail"


def test_workers_do_not_change_results():
    one = run_verify(VerifyConfig(prec=16, seed=3).with_all_trials(4))
    two = run_verify(VerifyConfig(prec=16, seed=3, workers=2).with_all_trials(4))
    one["config"]["workers"] = two["config"]["workers"]
    assert strip_timing(one) == strip_timing(two)


def test_bench_table(capsys, tmp_path):
    code, out, err = run(capsys, "bench", "--sizes", "8,16", "--repeats", "2", "--figures-dir", str(tmp_path))
    assert code == 0
    lines = out.strip().split("\n")
    header = lines[0].split("\t")
    assert header[0] == "size" and "ratio" in header and len(lines) == 3
    assert all(line.split("\t")[-1] == "True" for line in lines[1:])
    assert (tmp_path / "bench.png").exists()


def test_console_module_entry():
    proc = subprocess.run([sys.executable, "-m", "skewlaurent", "eval", "t*u"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "(u+1)*t + O(t^32)"
