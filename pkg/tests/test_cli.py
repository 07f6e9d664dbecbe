"""CLI grammar, exit codes, rendering, and output determinism."""

import json
import re

from tracedet import cli
from tracedet.cli import render_report, run
from tracedet.verify import verify_thm1


def test_verify_thm1_single(capsys):
    assert run(["verify", "thm1", "--n", "4"]) == 0
    out = capsys.readouterr().out
    assert re.search(r"^PASS thm1 n=4 \(\d+(\.\d+)? ms\)$", out.strip())


def test_json_output_schema(capsys):
    assert run(["verify", "thm3", "--n", "2", "--format", "json"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert len(reports) == 1
    report = reports[0]
    assert report["identity"] == "thm3"
    assert report["n"] == 2
    assert report["status"] == "PASS"
    assert "millis" in report and "params" in report


def test_render_empty_json():
    assert render_report([], "json") == "[]"


def test_render_fail_report_includes_residual():
    bad = verify_thm1(3, corrupt_sign=True)
    text = render_report([bad], "text")
    assert text.startswith("FAIL thm1 n=3")
    assert "residual:" in text
    blob = json.loads(render_report([bad], "json"))
    assert "residual" in blob[0]


def test_exhaustive_eps(capsys):
    assert run(["verify", "thm2", "--n", "5", "--eps", "exhaustive", "--seed", "1"]) == 0
    assert "eps=exhaustive" in capsys.readouterr().out


def test_usage_errors(capsys):
    assert run(["verify", "thm1", "--bogus"]) == 2
    assert run(["verify", "nonsense"]) == 2
    assert run(["verify", "cor6", "--n", "3"]) == 2
    assert run(["verify", "thm1", "--n", "-1"]) == 2
    assert run(["verify", "all", "--n", "2"]) == 2
    assert run(["verify", "thm1", "--n", "2", "--max-n", "3"]) == 2
    assert run(["verify", "trace", "--n", "2"]) == 2
    assert run(["verify", "thm1", "--trials", "0"]) == 2
    assert run(["verify", "thm1", "--n", "8"]) == 2
    capsys.readouterr()


def test_exit_one_on_failure(monkeypatch, capsys):
    monkeypatch.setattr(cli, "verify_thm1", lambda n: verify_thm1(3, corrupt_sign=True))
    assert run(["verify", "thm1", "--n", "3"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert run(["verify", "cor5", "--n", "2", "--format", "json", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    reports = json.loads(target.read_text())
    assert reports[0]["identity"] == "cor5"


def _normalized_json(out: str) -> str:
    reports = json.loads(out)
    for r in reports:
        r["millis"] = 0.0
    return json.dumps(reports)


def test_json_determinism(capsys):
    args = ["verify", "magnus", "--n", "2", "--trials", "3", "--seed", "9", "--format", "json"]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    second = capsys.readouterr().out
    assert _normalized_json(first) == _normalized_json(second)
    # Byte-identical once the timing field is zeroed.
    assert re.sub(r'"millis": [0-9.e-]+', '"millis": 0', first) == \
        re.sub(r'"millis": [0-9.e-]+', '"millis": 0', second)


def test_all_smoke(capsys):
    assert run(["verify", "all", "--max-n", "2", "--trials", "2", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    lines = [l for l in out.splitlines() if l]
    assert all(l.startswith("PASS") for l in lines)
    # Aggregation is ordered by (identity, n, params).
    identities = [l.split()[1] for l in lines]
    assert identities == sorted(identities)
    for expected in ("thm1", "thm3", "cor5", "cor6", "magnus", "magnus-original", "trace"):
        assert expected in identities


def test_generator_flag(capsys):
    assert run(["verify", "trace", "--trials", "5", "--generator", "gaussian"]) == 0
    assert "generator=gaussian" in capsys.readouterr().out
