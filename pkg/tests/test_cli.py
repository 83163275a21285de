import json
import subprocess
import sys
from pathlib import Path

import pytest

from masabimod.cli import main
from masabimod.pattern_core import analyze
from masabimod.serialize import analysis_from_dict, pattern_from_document

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_nest(capsys):
    code, out, _ = run(capsys, "analyze", "--input", SAMPLES / "nest-2x2.json")
    assert code == 0
    rep = json.loads(out)
    assert rep["analysis"]["delta"] == [[0, 0], [1, 1]]
    assert rep["analysis"]["u0"] == [[0, 1]]
    assert rep["input_digest"].startswith("2x2:")
    assert "timings" not in rep


def test_analyze_zero_diagonal_and_empty(capsys):
    code, out, _ = run(capsys, "analyze", SAMPLES / "zero-diagonal-3x3.json")
    assert code == 0 and json.loads(out)["analysis"]["delta"] == []
    code, out, _ = run(capsys, "analyze", SAMPLES / "empty-3x4.json")
    a = json.loads(out)["analysis"]
    assert code == 0
    assert a["delta"] == a["u0"] == a["atoms"] == a["blocks"] == []


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", SAMPLES / "nest-2x2.json", "--format", "text")
    assert code == 0 and "U0 (1): [(0, 1)]" in out


def test_report_round_trip(capsys):
    _, out, _ = run(capsys, "analyze", SAMPLES / "zero-diagonal-3x3.json")
    d = json.loads(out)["analysis"]
    p = pattern_from_document(d["pattern"])
    assert analysis_from_dict(d) == analyze(p)


def test_report_is_deterministic(capsys):
    outs = {run(capsys, "verify", SAMPLES / "tro-two-blocks.json", "--seed", 3)[1] for _ in range(2)}
    assert len(outs) == 1
    _, out, _ = run(capsys, "analyze", SAMPLES / "nest-2x2.json", "--timings")
    assert "timings" in json.loads(out)


def test_verify_nest_has_18_reports(capsys):
    code, out, _ = run(capsys, "verify", "--input", SAMPLES / "nest-2x2.json")
    reports = json.loads(out)["verifier_reports"]
    assert code == 0 and len(reports) == 18 and all(r["passed"] for r in reports)


def test_verify_tro_and_csl_add_reports(capsys):
    code, out, _ = run(capsys, "verify", SAMPLES / "tro-two-blocks.json")
    ids = [r["theorem_id"] for r in json.loads(out)["verifier_reports"]]
    assert code == 0 and len(ids) == 22 and "Thm2.2" in ids
    code, out, _ = run(capsys, "verify", SAMPLES / "chain-3.json")
    ids = [r["theorem_id"] for r in json.loads(out)["verifier_reports"]]
    assert code == 0 and "Cor5.3" in ids


def test_verify_random(capsys):
    code, out, _ = run(
        capsys, "verify", "--random", "--seed", 42, "--count", 10,
        "--max-rows", 6, "--max-cols", 6, "--density", 0.3,
    )
    rep = json.loads(out)
    assert code == 0 and rep["instances"] == 10 and rep["failures"] == []
    code, out, _ = run(capsys, "verify", "--random", "--count", 0)
    assert code == 0 and json.loads(out)["reports"] == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    import masabimod.theorem_suite as ts

    monkeypatch.setattr(ts, "analyze", lambda p: 1 / 0)
    code, out, _ = run(capsys, "verify", SAMPLES / "nest-2x2.json")
    assert code == 1 and '"passed": false' in out


def test_csl(capsys):
    code, out, _ = run(capsys, "csl", SAMPLES / "chain-3.json")
    a = json.loads(out)["analysis"]
    assert code == 0 and a["rad"] == [[0, 1], [0, 2], [1, 2]]
    code, out, _ = run(capsys, "csl", SAMPLES / "two-atoms.json")
    a = json.loads(out)["analysis"]
    assert a["rad"] == [] and a["commutant"] == [[0], [1]]


def test_random_writes_deterministic_files(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(capsys, "random", "--seed", 7, "--rows", 4, "--cols", 4, "--density", 0.5, "--out", path)[0] == 0
    assert a.read_text() == b.read_text()
    assert run(capsys, "analyze", a)[0] == 0
    _, out, _ = run(capsys, "random", "--seed", 7, "--density", 1.0)
    assert len(json.loads(out)["entries"]) == 16
    _, out, _ = run(capsys, "random", "--seed", 7, "--density", 0.0)
    assert json.loads(out)["entries"] == []


@pytest.mark.parametrize(
    "doc",
    [
        "not json",
        '{"rows": 2, "cols": 2}',
        '{"rows": 2, "cols": 2, "entries": [[0, 5]]}',
        '{"grid": ["10", "1"]}',
        '{"grid": ["1x"]}',
        '{"grid": ["10"], "entries": []}',
        '{"grid": ["10"], "rows": 3}',
        "[1, 2]",
    ],
)
def test_malformed_input_exits_2(tmp_path, capsys, doc):
    path = tmp_path / "bad.json"
    path.write_text(doc)
    code, out, err = run(capsys, "analyze", path)
    assert code == 2 and out == "" and err.startswith("error:")


def test_input_errors_exit_2(tmp_path, capsys):
    assert run(capsys, "analyze", tmp_path / "missing.json")[0] == 2
    assert run(capsys, "analyze")[0] == 2
    assert run(capsys, "verify", "--random", "--density", 2)[0] == 2
    assert run(capsys, "random", "--out", tmp_path / "no" / "dir" / "x.json")[0] == 2
    bad = tmp_path / "lat.json"
    bad.write_text('{"universe": 2, "generators": [[0, 9]]}')
    assert run(capsys, "csl", bad)[0] == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "masabimod", "verify", str(SAMPLES / "nest-2x2.json"), "--format", "text"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and "18 reports, 0 failed" in res.stdout
