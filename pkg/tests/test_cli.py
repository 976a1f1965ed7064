"""End-to-end command line behaviour, driven through cli.main."""

import io
import json
import subprocess
import sys

import pytest

from helpers import dot_is_valid
from parityknots import cli, diagram_from_json, parse_virtual_code


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariant_json_virtual_trefoil(capsys):
    code, out, err = run(
        capsys, "invariant", "O1+ O2+ U1+ U2+", "--m", "1", "--k", "1",
        "--format", "json",
    )
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["kind"] == "virtual"
    assert report["delta"] == [2, 2, 0]
    assert report["delta_word"] == "u0 v0 v0 u0"
    assert report["vassiliev"] == [{"point": [0, 0], "poly": {"[0]": "1", "[1]": "2"}}]
    assert report["chords"] == 2 and not report["closed"]


def test_invariant_table_free_closed(capsys):
    code, out, err = run(
        capsys, "invariant", "1 2 1 2", "--closed", "--m", "1"
    )
    assert code == 0
    assert "gamma_canonical: [0, 0]" in out
    assert "kind: free" in out


def test_invariant_rejects_bad_code(capsys):
    code, out, err = run(capsys, "invariant", "1 2 1")
    assert code == 2
    assert "exactly two" in err or "twice" in err or err  # parse error surfaced


def test_invariant_batch_strict_and_lenient(tmp_path, capsys):
    batch = tmp_path / "codes.txt"
    batch.write_text("1 2 1 2\nO1+ U1-\n1 1\n")
    code, out, err = run(capsys, "invariant", "--batch", str(batch))
    assert code == 2
    assert "line 2" in err

    code, out, err = run(capsys, "invariant", "--batch", str(batch), "--lenient")
    assert code == 0
    assert "line 2" in err
    assert out.count("input:") == 2


def test_invariant_batch_stdin_empty_is_unknot(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(""))
    code, out, err = run(capsys, "invariant", "--batch", "-", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["chords"] == 0
    assert report["gamma"] == [0, 0, 0]


def test_invariant_no_inputs_is_an_error(capsys):
    code, out, err = run(capsys, "invariant")
    assert code == 2
    assert "nothing to do" in err


def test_invariant_validates_m(capsys):
    code, out, err = run(capsys, "invariant", "1 2 1 2", "--m", "0")
    assert code == 2


def test_compare_distinguishes_trefoil_from_kink(capsys):
    code, out, err = run(
        capsys, "compare", "O1+ O2+ U1+ U2+", "O1+ U1+", "--m", "1,2",
        "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["distinguished"] is True
    assert report["distinguishing_m"] == 1
    assert report["values"]["1"]["equal"] is False


def test_compare_rejects_mixed_kinds(capsys):
    code, out, err = run(capsys, "compare", "1 2 1 2", "O1+ U1+")
    assert code == 2
    assert "cannot compare" in err


def test_fuzz_small_clean(capsys):
    code, out, err = run(
        capsys, "fuzz", "--trials", "6", "--steps", "6", "--m", "1",
        "--seed", "3", "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert report["violations"] == 0
    assert report["violation_records"] == []
    assert report["settings"]["trials"] == 6
    assert report["flat_stats"]["values"] == 6


def test_fuzz_kind_restriction_and_bad_kind(capsys):
    code, out, err = run(
        capsys, "fuzz", "--trials", "4", "--steps", "4", "--m", "1",
        "--kinds", "R2Add,R2Remove", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["settings"]["kinds"] == ["R2Add", "R2Remove"]

    code, out, err = run(capsys, "fuzz", "--trials", "2", "--kinds", "R9")
    assert code == 2
    assert "move kind" in err


def test_vassiliev_check_small(capsys):
    code, out, err = run(
        capsys, "vassiliev-check", "--trials", "3", "--m", "1", "--k", "1",
        "--chords", "3", "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert report["singular_chords"] == 2


def test_cayley_dot_and_counts(capsys):
    code, out, err = run(capsys, "cayley", "flat", "1", "1")
    assert code == 0
    assert dot_is_valid(out)

    code, out, err = run(capsys, "cayley", "flat", "1", "1", "--format", "json")
    report = json.loads(out)
    assert report["nodes"] == 4
    assert report["spheres"] == [1, 3]

    code, out, err = run(capsys, "cayley", "signed", "1", "1", "--format", "json")
    assert json.loads(out)["nodes"] == 6


def test_random_code_round_trips(capsys):
    code, out1, err = run(capsys, "random", "--chords", "4", "--virtual", "--seed", "9")
    assert code == 0
    parsed = parse_virtual_code(out1.strip())
    assert parsed.n == 4

    code, out2, err = run(capsys, "random", "--chords", "4", "--virtual", "--seed", "9")
    assert out2 == out1

    code, out, err = run(
        capsys, "random", "--chords", "3", "--closed", "--format", "json", "--seed", "2"
    )
    diagram = diagram_from_json(json.loads(out))
    assert diagram.n == 3 and diagram.closed


def test_env_overrides_depth(capsys, monkeypatch):
    monkeypatch.setenv("PARITYKNOTS_M", "1")
    code, out, err = run(capsys, "invariant", "1 2 1 2", "--format", "json")
    assert json.loads(out)["m"] == 1

    monkeypatch.setenv("PARITYKNOTS_FORMAT", "json")
    code, out, err = run(capsys, "invariant", "1 2 1 2")
    assert json.loads(out)["m"] == 1  # still one JSON line

    # cayley keeps its own format vocabulary regardless of the env default
    code, out, err = run(capsys, "cayley", "flat", "1", "1")
    assert code == 0
    assert dot_is_valid(out)


def test_bad_format_is_usage_error(capsys):
    code, out, err = run(capsys, "invariant", "1 2 1 2", "--format", "yaml")
    assert code == 2
    assert "format" in err


def test_no_arguments_is_usage_error(capsys):
    assert cli.main([]) == 2
    capsys.readouterr()


def test_console_script_entry_point():
    proc = subprocess.run(
        ["parityknots", "cayley", "flat", "1", "1", "--format", "json"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["nodes"] == 4
