"""Tests for the command-line front end: output contracts and exit codes."""

from __future__ import annotations

import json

import pytest

from daha import CheckReport, Counterexample
from daha.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_skein_worked_example(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--rep", "skein", "--kappa", "2",
            "--word", "s1*y1", "--elem", "(a1^2*a2^-1,[2 1])",
        )
        assert code == 0
        assert out.strip() == "c^4*(a1^-1*a2^2,[1 2])"

    def test_poly_identity_word(self, capsys):
        code, out, _ = run(capsys, "eval", "--rep", "poly", "--kappa", "2",
                           "--word", "", "--elem", "X1")
        assert code == 0
        assert out.strip() == "X1"

    def test_poly_braid_on_constant(self, capsys):
        code, out, _ = run(capsys, "eval", "--rep", "poly", "--kappa", "2",
                           "--word", "s1", "--elem", "1")
        assert code == 0
        assert out.strip() == "s"

    def test_d_substitution_flag(self, capsys):
        args = ["eval", "--rep", "skein", "--kappa", "2", "--word", "s1", "--elem", "(1,[1 2])"]
        code, out, _ = run(capsys, *args)
        assert code == 0
        assert out.strip() == "d^-1*(1,[2 1])"
        code, out, _ = run(capsys, *args, "--d-eq-s")
        assert code == 0
        assert out.strip() == "s^-1*(1,[2 1])"

    def test_parse_error_exits_two(self, capsys):
        code, _, err = run(capsys, "eval", "--rep", "poly", "--kappa", "2",
                           "--word", "x3", "--elem", "1")
        assert code == 2
        assert "error:" in err

    def test_bad_element_exits_two(self, capsys):
        code, _, err = run(capsys, "eval", "--rep", "skein", "--kappa", "2",
                           "--word", "", "--elem", "(a1,[1 1])")
        assert code == 2
        assert "error:" in err

    def test_word_from_file(self, capsys, tmp_path):
        word_file = tmp_path / "word.txt"
        word_file.write_text("s1*y1\n")
        code, out, _ = run(
            capsys, "eval", "--rep", "skein", "--kappa", "2",
            "--word-file", str(word_file), "--elem", "(a1^2*a2^-1,[2 1])",
        )
        assert code == 0
        assert out.strip() == "c^4*(a1^-1*a2^2,[1 2])"

    def test_usage_error_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--rep", "poly", "--kappa", "2", "--word", ""])
        assert exc.value.code == 2


class TestCheck:
    def test_relations_pass_and_echo_header(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "relations", "--kappa", "2",
                           "--max-exp", "1", "--seed", "3")
        assert code == 0
        header = out.splitlines()[0]
        assert header.startswith("#")
        assert "kappa=2" in header and "seed=3" in header
        assert "FAIL" not in out

    def test_json_lines_format(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "all", "--kappa", "2",
                           "--max-exp", "1", "--num-words", "3", "--max-word-len", "2",
                           "--format", "json-lines")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert records[0]["record"] == "header"
        assert records[0]["kappa"] == 2
        checks = [r for r in records[1:] if r["record"] == "check"]
        assert checks and all(r["failures"] == 0 for r in checks)

    def test_intertwiner_suite(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "intertwiner", "--kappa", "2",
                           "--max-exp", "1", "--num-words", "5", "--max-word-len", "3")
        assert code == 0
        assert "PASS intertwiner" in out

    def test_subrep_suite(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "subrep", "--kappa", "2",
                           "--num-words", "5", "--max-word-len", "3")
        assert code == 0

    def test_max_inputs_caps_grids(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "relations", "--kappa", "2",
                           "--max-exp", "1", "--max-inputs", "4", "--format", "json-lines")
        assert code == 0
        header = json.loads(out.splitlines()[0])
        assert header["relations_poly_inputs"] == 4

    def test_failures_exit_one(self, capsys, monkeypatch):
        failing = CheckReport(
            label="poly:forced", kappa=2, cases=1, failures=1, seed=0,
            counterexample=Counterexample("w", "v", "l", "r"),
        )
        monkeypatch.setattr("daha.verify.check_relations", lambda *a, **k: [failing])
        code, out, _ = run(capsys, "check", "--suite", "relations", "--kappa", "2")
        assert code == 1
        assert "FAIL poly:forced" in out
        assert "word:  w" in out

    def test_bad_kappa_exits_two(self, capsys):
        code, _, err = run(capsys, "check", "--suite", "relations", "--kappa", "0")
        assert code == 2
        assert "error:" in err


class TestBench:
    def test_smoke(self, capsys):
        code, out, _ = run(capsys, "bench", "--kappa", "2", "--word-len", "4",
                           "--seed", "1", "--count", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("# bench kappa=2")
        assert lines[1].startswith("poly:") and lines[2].startswith("skein:")

    def test_rank_one_fast_path(self, capsys):
        code, out, _ = run(capsys, "bench", "--kappa", "1", "--word-len", "3")
        assert code == 0
        assert "skein:" in out
