"""Tests for the nodecount command-line interface."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import pytest

from nodepoly.cli import run
from nodepoly.enriques import named_diagram, to_text

GOLDEN = Path(__file__).parent / "golden"


def invoke(capsys, *argv: str) -> tuple[int, str]:
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCounts:
    def test_plane_count(self, capsys):
        code, out = invoke(capsys, "plane", "--r", "8", "--m", "5")
        assert code == 0
        assert "26136" in out and "in range (m >= r/2+1)" in out

    def test_plane_out_of_range_annotated(self, capsys):
        code, out = invoke(capsys, "plane", "--r", "3", "--m", "1", "--format", "json")
        assert code == 0
        record = json.loads(out)
        assert record["result"] == 75
        assert record["valid"] == "outside range (m >= r/2+1)"

    def test_p4_irreducible(self, capsys):
        code, out = invoke(capsys, "p4", "--irreducible")
        assert code == 0 and "17601000" in out

    def test_p4_numeric(self, capsys):
        code, out = invoke(capsys, "p4", "--m", "5", "--format", "json")
        assert json.loads(out)["result"] == 21617125

    def test_abelian_numeric(self, capsys):
        code, out = invoke(capsys, "abelian", "--r", "2", "--g", "3", "--format", "json")
        assert json.loads(out)["result"] == 180

    def test_abelian_oracle(self, capsys):
        code, out = invoke(
            capsys, "abelian", "--oracle", "--r", "2", "--g", "3", "--format", "json"
        )
        assert json.loads(out)["result"] == 180


class TestTables:
    def test_plane_table_matches_golden(self, capsys):
        code, out = invoke(capsys, "plane", "--table", "--format", "json")
        assert code == 0
        results = [json.loads(line)["result"] for line in out.splitlines()]
        assert results == (GOLDEN / "plane_aq.txt").read_text().splitlines()

    def test_abelian_table_matches_golden(self, capsys):
        code, out = invoke(capsys, "abelian", "--table", "--format", "json")
        results = [json.loads(line)["result"] for line in out.splitlines()]
        assert results == (GOLDEN / "abelian_table.txt").read_text().splitlines()

    def test_bq_dump(self, capsys):
        code, out = invoke(capsys, "bq", "--q", "1", "--format", "json")
        assert json.loads(out)["result"] == "v^3 + v^2*w1 + v*w2"

    def test_bq_all(self, capsys):
        code, out = invoke(capsys, "bq", "--format", "json")
        assert len(out.splitlines()) == 8

    def test_p4_symbolic(self, capsys):
        code, out = invoke(capsys, "p4", "--symbolic", "--format", "json")
        assert json.loads(out)["result"] == (
            (GOLDEN / "threefold_6nodal.txt").read_text().strip()
        )

    def test_p4_lines3(self, capsys):
        code, out = invoke(capsys, "p4", "--lines3", "--format", "json")
        assert json.loads(out)["result"] == (
            (GOLDEN / "threefold_lines3.txt").read_text().strip()
        )


class TestFormats:
    def test_deterministic_output(self, capsys):
        _, first = invoke(capsys, "plane", "--table")
        _, second = invoke(capsys, "plane", "--table")
        assert first == second

    def test_json_fields(self, capsys):
        _, out = invoke(capsys, "plane", "--r", "1", "--m", "4", "--format", "json")
        record = json.loads(out)
        assert set(record) == {"command", "inputs", "result", "valid", "ref"}
        assert record["command"] == "plane"
        assert record["inputs"] == {"r": 1, "m": 4}

    def test_csv_shape(self, capsys):
        _, out = invoke(capsys, "abelian", "--table", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["command", "inputs", "result", "valid", "ref"]
        assert len(rows) == 10

    def test_text_alignment(self, capsys):
        _, out = invoke(capsys, "plane", "--table")
        lines = out.splitlines()
        assert len(lines) == 8
        # the ref column starts at the same offset on every line
        offsets = {line.rindex("plane-aq") for line in lines}
        assert len(offsets) == 1


class TestEnriques:
    def test_check_ok(self, capsys, tmp_path):
        path = tmp_path / "a2.diagram"
        path.write_text(to_text(named_diagram("A", 2)))
        code, out = invoke(capsys, "enriques", "check", str(path), "--format", "json")
        assert code == 0 and json.loads(out)["result"] == "ok"

    def test_check_violation_reported(self, capsys, tmp_path):
        path = tmp_path / "bad.diagram"
        path.write_text("0 1 - -\n")
        code, out = invoke(capsys, "enriques", "check", str(path), "--format", "json")
        assert code == 0
        assert "minimality" in json.loads(out)["result"]

    def test_invariants_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("0 2 - -\n"))
        code, out = invoke(capsys, "enriques", "invariants", "-", "--format", "json")
        result = json.loads(out)["result"]
        assert "cod=1" in result and "milnor=1" in result and "e=2" in result

    def test_inequalities(self, capsys, tmp_path):
        path = tmp_path / "a1.diagram"
        path.write_text(to_text(named_diagram("A", 1)))
        code, out = invoke(capsys, "enriques", "inequalities", str(path), "--format", "json")
        result = json.loads(out)["result"]
        assert "ii=eq" in result and "viii=eq" in result and "iv=holds" in result

    def test_enumerate(self, capsys):
        code, out = invoke(
            capsys, "enriques", "enumerate", "--max-v", "1", "--max-w", "2",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["result"] == "0 2 - -"


class TestValidity:
    def test_plane(self, capsys):
        _, out = invoke(capsys, "validity", "plane", "--r", "8", "--m", "5",
                        "--format", "json")
        assert json.loads(out)["result"] == "true"

    def test_abelian(self, capsys):
        _, out = invoke(capsys, "validity", "abelian", "--m", "1", "--g", "12",
                        "--r", "1", "--format", "json")
        assert json.loads(out)["result"] == "false"

    def test_kva(self, capsys):
        _, out = invoke(capsys, "validity", "kva", "--surface", "enriques",
                        "--m", "2", "--d", "8", "--k", "1", "--format", "json")
        assert json.loads(out)["result"] == "true"


class TestErrors:
    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_out_of_range_r(self, capsys):
        assert run(["plane", "--r", "99", "--m", "2"]) == 2

    def test_missing_flags(self, capsys):
        assert run(["plane"]) == 2
        assert run(["validity", "kva", "--m", "1"]) == 2
        assert run(["enriques", "enumerate"]) == 2

    def test_missing_file(self, capsys):
        assert run(["enriques", "check", "/nonexistent/x.diagram"]) == 1

    def test_no_args(self, capsys):
        assert run([]) == 2
