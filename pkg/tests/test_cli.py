"""Command-line interface: formats, exit codes, round trips, determinism."""

import json

import pytest

from g2cy import enumerate_all
from g2cy.cli import main, parse_summands
from g2cy.errors import G2CYError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    def test_single(self):
        assert parse_summands("(1,1)") == [(1, 1)]

    def test_sum_with_spaces(self):
        assert parse_summands("(1,0) + (-2, 3)") == [(1, 0), (-2, 3)]

    def test_rejects_garbage(self):
        with pytest.raises(G2CYError):
            parse_summands("1,0")


class TestRoots:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "roots")
        assert code == 0
        assert "count: 6" in out
        assert "Weyl group order: 12" in out
        assert "rho: (1,1)" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "roots", "--format", "json")
        data = json.loads(out)
        assert data["count"] == 6 and data["weyl_order"] == 12
        assert data["rho"] == [1, 1]
        assert len(data["positive_roots"]) == 6


class TestParabolicAndBundle:
    def test_parabolic_json(self, capsys):
        code, out, _ = run(capsys, "parabolic", "P2", "--format", "json")
        data = json.loads(out)
        assert data["dim"] == 5 and data["anticanonical"] == [0, 5]

    def test_bundle(self, capsys):
        code, out, _ = run(capsys, "bundle", "P1", "(1,0)+(2,0)", "--format", "json")
        data = json.loads(out)
        assert data["rank"] == 2 and data["det"] == [3, 0]

    def test_cohomology(self, capsys):
        code, out, _ = run(capsys, "cohomology", "P1", "(-3,0)")
        assert code == 0
        assert "H^5" in out and "dim 1" in out


class TestClassify:
    def test_threefolds_markdown(self, capsys):
        code, out, _ = run(capsys, "classify", "--dim", "3", "--check-paper",
                           "--format", "md")
        assert code == 0
        rows = [line for line in out.splitlines() if line.startswith("| ") and
                "No." not in line and "---" not in line]
        assert len(rows) == 8
        assert "8 matched, 0 missing, 0 extra" in out

    def test_fourfolds_exit_two(self, capsys):
        code, out, _ = run(capsys, "classify", "--dim", "4", "--check-paper")
        assert code == 2
        assert "EXTRA" in out and "(1,0)" in out and "(1,2)" in out

    @pytest.mark.parametrize("dim,expected", [(5, 0), (3, 0), (2, 0)])
    def test_clean_dimensions_exit_zero(self, capsys, dim, expected):
        code, _, _ = run(capsys, "classify", "--dim", str(dim), "--check-paper")
        assert code == expected

    def test_without_check_flag_exit_zero(self, capsys):
        code, _, _ = run(capsys, "classify", "--dim", "4")
        assert code == 0

    def test_parabolic_filter(self, capsys):
        code, out, _ = run(capsys, "classify", "--dim", "3", "--parabolic", "P2",
                           "--format", "json")
        data = json.loads(out)
        assert [row["parabolic"] for row in data["rows"]] == ["P2"] * 3

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "classify", "--dim", "3", "--format", "json")
        data = json.loads(out)
        expected = [{"parabolic": r.parabolic,
                     "summands": [list(w) for w in r.summands],
                     "split": r.split}
                    for r in enumerate_all(3)]
        stripped = [{k: row[k] for k in ("parabolic", "summands", "split")}
                    for row in data["rows"]]
        assert stripped == expected


class TestInvariants:
    def test_first_threefold_json(self, capsys):
        code, out, _ = run(capsys, "invariants", "P1", "(1,1)", "--format", "json")
        data = json.loads(out)
        assert data["deg"] == 42 and data["c2H"] == 84
        assert data["h11"] == 1 and data["h12"] == 50
        assert data["euler"] == -98
        assert "discrepancies" not in data or data["discrepancies"] == []

    def test_third_threefold_flags_c2(self, capsys):
        code, out, _ = run(capsys, "invariants", "P2", "(1,1)", "--format", "json")
        data = json.loads(out)
        assert data["deg"] == 14
        assert data["published"]["c2H"] == 50
        assert data["published"]["matches"]["c2H"] is False
        assert data["published"]["matches"]["deg"] is True
        assert any("c2H" in line for line in data["discrepancies"])

    def test_invalid_candidate_exits_one(self, capsys):
        code, _, err = run(capsys, "invariants", "P2", "(1,0)")
        assert code == 1
        assert "anticanonical" in err


class TestTable:
    @pytest.mark.parametrize("number,rows", [(1, 1), (2, 5), (3, 8), (4, 7)])
    def test_row_counts(self, capsys, number, rows):
        code, out, _ = run(capsys, "table", str(number), "--format", "json")
        data = json.loads(out)
        assert len(data["rows"]) == rows


class TestHarness:
    def test_usage_error_exits_one(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["parabolic", "P9"])
        assert err.value.code == 1

    def test_seed_is_accepted(self, capsys):
        code, out, _ = run(capsys, "roots", "--seed", "7")
        assert code == 0 and "count: 6" in out

    def test_byte_identical_runs(self, capsys):
        _, first, _ = run(capsys, "classify", "--dim", "3", "--format", "json")
        _, second, _ = run(capsys, "classify", "--dim", "3", "--format", "json")
        assert first == second
        _, first, _ = run(capsys, "invariants", "P1", "(1,1)", "--format", "json")
        _, second, _ = run(capsys, "invariants", "P1", "(1,1)", "--format", "json")
        assert first == second
