import json
import os

import pytest

from alexzero.cli import (
    InvalidRangeError,
    cmd_sweep,
    knot_record,
    main,
    record_to_json_line,
)
from alexzero.twobridge import CFWord


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_expand_command(capsys):
    code, out = run_cli(capsys, "expand", "--frac", "3/7")
    assert code == 0
    payload = json.loads(out)
    assert payload["beta_normalized"] == 4 and payload["mirrored"]
    assert payload["cf"] == "1,2"
    assert payload["flags"]["is_knot"]


def test_expand_bad_input(capsys):
    assert main(["expand", "--frac", "7/3"]) == 2
    assert main(["expand", "--frac", "nonsense"]) == 2
    assert main(["expand", "--frac", "2/4"]) == 2


def test_poly_command(capsys):
    code, out = run_cli(capsys, "poly", "--cf", "1,-1")
    assert code == 0
    payload = json.loads(out)
    assert payload["delta"] == ["-1", "3", "-1"]
    assert payload["delta_normalized"] == ["1", "-3", "1"]
    assert payload["determinant"] == 5
    assert (payload["beta"], payload["alpha"]) == (2, 5)


def test_zeros_command(capsys):
    code, out = run_cli(capsys, "zeros", "--cf", "1,1", "--tol", "1e-13")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["zeros"]) == 2
    assert payload["hoste_ok"] and payload["thm1_ok"]
    assert payload["real_count_exact"] == 0


def test_zeros_bad_tol(capsys):
    assert main(["zeros", "--cf", "1,1", "--tol", "0.5"]) == 2


def test_certify_command(capsys):
    code, out = run_cli(capsys, "certify", "--cf", "2,-2,2",
                        "--side", "upper", "--bound", "3", "--v", "diag-a")
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == ["kind", "k", "v", "pivots", "verdict", "implied"]
    assert payload["verdict"] == "positive-definite"

    code, out = run_cli(capsys, "certify", "--cf", "1,1",
                        "--side", "upper", "--bound", "1")
    assert code == 1
    assert json.loads(out)["verdict"] == "not-positive-definite"


def test_certify_rational_bound(capsys):
    code, out = run_cli(capsys, "certify", "--cf", "1,-1",
                        "--side", "upper", "--bound", "7/2")
    assert code == 0
    assert json.loads(out)["k"] == "7/2"


def test_verify_commands(capsys):
    for theorem, cf in [("1", "2,3,-1"), ("2", "1,-1,1"),
                        ("3", "2,-2,2"), ("4", "1,1,-1,1")]:
        code, out = run_cli(capsys, "verify", "--theorem", theorem, "--cf", cf)
        assert code == 0, (theorem, out)
        assert json.loads(out)["pass"] is True


def test_verify_not_applicable_is_usage_error(capsys):
    assert main(["verify", "--theorem", "2", "--cf", "1,1"]) == 2
    assert main(["verify", "--theorem", "4", "--cf", "2,1"]) == 2


def test_verify_theorem4_failure(capsys):
    code, out = run_cli(capsys, "verify", "--theorem", "4", "--cf", "1,1,1,-1")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_family_command(capsys):
    code, out = run_cli(capsys, "family", "--m", "2", "--c", "1", "--remark2")
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"]["cosine_zeros"]
    assert abs(payload["remark2_extremal"] - 4.390256884515514) < 1e-12
    assert main(["family", "--m", "2", "--c", "2", "--remark2"]) == 2


def test_record_serialization_shape():
    rec = knot_record(CFWord((1, -1)))
    line = record_to_json_line(rec)
    payload = json.loads(line)
    assert list(payload) == ["cf", "beta", "alpha", "m", "flags", "delta",
                             "zeros", "min_re", "max_re", "hoste_ok",
                             "thm1_ok", "certs"]
    assert payload["delta"] == ["-1", "3", "-1"]
    assert all(isinstance(c, str) for c in payload["delta"])
    assert payload["certs"]["t1_lower"] == "ok"
    assert len(payload["zeros"]) == 2


def test_sweep_counts_and_determinism(tmp_path):
    out1 = tmp_path / "a.jsonl"
    out2 = tmp_path / "b.jsonl"
    s1 = cmd_sweep(2, 1, str(out1), jobs=1)
    s2 = cmd_sweep(2, 1, str(out2), jobs=2)
    assert s1.records == 6  # 2 + 4 words
    assert out1.read_bytes() == out2.read_bytes()
    recs = [json.loads(line) for line in out1.read_text().splitlines()]
    trefoil = next(r for r in recs if r["cf"] == "1,1")
    assert trefoil["min_re"] == 0.5
    fig8 = next(r for r in recs if r["cf"] == "1,-1")
    assert abs(fig8["min_re"] - 0.38196601125010515) < 1e-15


def test_sweep_medium(tmp_path):
    out = tmp_path / "c.jsonl"
    summary = cmd_sweep(4, 2, str(out), jobs=2)
    assert summary.records == 340  # 4 + 16 + 64 + 256
    assert summary.hoste_violations == 0
    assert summary.thm1_violations == 0
    assert summary.min_margin > 0
    for line in out.read_text().splitlines():
        r = json.loads(line)
        assert len(r["zeros"]) == r["m"]
        assert r["thm1_ok"]


def test_sweep_plot_csv(tmp_path):
    out = tmp_path / "d.jsonl"
    plot = tmp_path / "d.csv"
    cmd_sweep(2, 1, str(out), jobs=1, plot=str(plot))
    lines = plot.read_text().splitlines()
    assert lines[0] == "re,im,cf"
    # one data row per zero: 2 words of degree 1, 4 of degree 2
    assert len(lines) == 1 + 2 + 8


def test_sweep_range_validation(tmp_path):
    with pytest.raises(InvalidRangeError):
        cmd_sweep(13, 2, str(tmp_path / "x.jsonl"))
    with pytest.raises(InvalidRangeError):
        cmd_sweep(2, 0, str(tmp_path / "x.jsonl"))
    assert main(["sweep", "--max-m", "99", "--max-a", "1",
                 "--out", str(tmp_path / "x.jsonl")]) == 2


def test_sweep_jobs_env_override(tmp_path, monkeypatch):
    out1 = tmp_path / "e1.jsonl"
    out2 = tmp_path / "e2.jsonl"
    monkeypatch.setenv("ALEXZERO_JOBS", "2")
    assert main(["sweep", "--max-m", "2", "--max-a", "1",
                 "--out", str(out1), "--jobs", "1"]) == 0
    monkeypatch.delenv("ALEXZERO_JOBS")
    assert main(["sweep", "--max-m", "2", "--max-a", "1",
                 "--out", str(out2), "--jobs", "1"]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_sweep_bad_output_path():
    assert main(["sweep", "--max-m", "1", "--max-a", "1",
                 "--out", "/nonexistent-dir/x.jsonl"]) == 2
