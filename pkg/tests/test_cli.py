"""Command line behavior: exit codes, formats, determinism."""

import io
import json
import subprocess
import sys

import pytest

from cstarlab import cli, verify
from cstarlab.verify import CheckRecord

DIAG123 = json.dumps(
    {
        "kind": "normal_matrix",
        "n": 3,
        "entries": [
            [1.0, 0.0], [0.0, 0.0], [0.0, 0.0],
            [0.0, 0.0], [2.0, 0.0], [0.0, 0.0],
            [0.0, 0.0], [0.0, 0.0], [3.0, 0.0],
        ],
    }
)

FUNC = json.dumps(
    {
        "kind": "function_algebra",
        "points": ["p", "q", "r"],
        "values": [[3.0, 0.0], [5.0, 0.0], [-2.0, 0.0]],
    }
)


def run_cli(**kwargs):
    out = io.StringIO()
    code = cli.run(cli.RunConfig(**kwargs), out)
    return code, out.getvalue()


def test_spectrum_text():
    code, text = run_cli(command="spectrum", inline=DIAG123)
    assert code == 0
    assert "3 spectrum point(s)" in text
    assert "lambda[0] = 1" in text


def test_spectrum_structured():
    code, text = run_cli(command="spectrum", inline=DIAG123, output_format="structured")
    assert code == 0
    record = json.loads(text)
    assert record["kind"] == "spectrum"
    assert [p[0] for p in record["points"]] == pytest.approx([1.0, 2.0, 3.0])


def test_classify_structured():
    code, text = run_cli(command="classify", inline=FUNC, output_format="structured")
    assert code == 0
    records = [json.loads(line) for line in text.splitlines()]
    flags = {r["class"]: r["member"] for r in records if r["kind"] == "classification"}
    assert flags == {
        "self_adjoint": True,
        "unitary": False,
        "projection": False,
        "positive": False,
    }
    offenders = [r for r in records if r["kind"] == "positive_offender"]
    assert offenders and offenders[0]["value"] == [-2.0, 0.0]


def test_characters_lists_every_point():
    code, text = run_cli(command="characters", inline=FUNC)
    assert code == 0
    assert text.count("character ") == 3
    assert "value 3" in text


def test_calculus_squares_the_spectrum():
    code, text = run_cli(
        command="calculus", inline=DIAG123, coefficients=(0j, 0j, 1 + 0j)
    )
    assert code == 0
    assert "spectrum of p(a): 1+0j, 4+0j, 9+0j" in text


def test_calculus_without_coefficients_is_a_usage_error(capsys):
    code, _ = run_cli(command="calculus", inline=DIAG123)
    assert code == 2
    assert "--coeffs" in capsys.readouterr().err


def test_quotient_command():
    code, text = run_cli(command="quotient", inline=FUNC, zero_set=("p", "r"))
    assert code == 0
    assert "quotient dimension: 2" in text
    assert "quotient norm: 3" in text


def test_quotient_without_zero_set_is_a_usage_error(capsys):
    code, _ = run_cli(command="quotient", inline=FUNC)
    assert code == 2
    assert "--zero-set" in capsys.readouterr().err


def test_unknown_command_and_bad_flags(capsys):
    assert run_cli(command="mystify")[0] == 2
    assert run_cli(command="spectrum", inline=FUNC, output_format="yaml")[0] == 2
    assert run_cli(command="spectrum", inline=FUNC, tol=0.0)[0] == 2
    assert run_cli(command="verify", max_size=0)[0] == 2
    capsys.readouterr()


def test_invalid_documents_exit_2(capsys):
    assert run_cli(command="spectrum", inline="{nope")[0] == 2
    shift = json.dumps(
        {
            "kind": "normal_matrix",
            "n": 2,
            "entries": [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
        }
    )
    assert run_cli(command="spectrum", inline=shift)[0] == 2
    assert "invalid input" in capsys.readouterr().err


def test_missing_file_exits_2(capsys):
    assert run_cli(command="spectrum", input_path="/no/such/file.json")[0] == 2
    assert "cannot read" in capsys.readouterr().err


def test_verify_text_summary():
    code, text = run_cli(command="verify", max_size=3, seed=5)
    assert code == 0
    assert "laws verified (seed=5, max_size=3, tol=1e-09)" in text.splitlines()[-1]


def test_verify_structured_stream_parses():
    code, text = run_cli(
        command="verify", max_size=3, seed=5, output_format="structured"
    )
    assert code == 0
    lines = [json.loads(line) for line in text.splitlines()]
    assert all(rec["pass"] for rec in lines if "law" in rec)
    summaries = [rec for rec in lines if rec.get("kind") == "summary"]
    assert summaries and all(s["pass"] for s in summaries)


def test_structured_verify_is_deterministic():
    first = run_cli(command="verify", max_size=3, seed=7, output_format="structured")
    second = run_cli(command="verify", max_size=3, seed=7, output_format="structured")
    assert first == second


def test_verify_failure_exits_1(monkeypatch):
    def broken(rng, tol, max_size):
        return [CheckRecord(law="broken", instance="here", defect=1.0, passed=False)]

    monkeypatch.setattr(verify, "LAWS", (("broken", broken),))
    code, text = run_cli(command="verify", max_size=2)
    assert code == 1
    assert "FAIL" in text
    assert "first failing instance: here" in text


def test_main_parses_argv():
    assert cli.main(["spectrum", "--inline", DIAG123]) == 0
    assert cli.main(["verify", "--max-size", "2", "--seed", "3"]) == 0


def test_stdin_is_the_default_input(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(FUNC))
    code, text = run_cli(command="spectrum")
    assert code == 0
    assert "3 spectrum point(s)" in text


def test_module_entry_point_runs_end_to_end():
    proc = subprocess.run(
        [sys.executable, "-m", "cstarlab", "spectrum", "--inline", DIAG123],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "lambda[2] = 3" in proc.stdout
