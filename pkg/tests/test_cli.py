# Area: CLI
# PRD: docs/prd-qweight.md
"""Tests for the command-line surface: documents, formats and exit codes."""
from fractions import Fraction
from unittest.mock import patch

import pytest

from qweight.cli.main import run
from qweight.cli.output import OutputDocument, format_rational, jsonable, parse_rationals
from qweight.enumerators import WeightDistribution, WeightKind
from qweight.shared.config import set_settings

MODULE = "qweight.cli.commands"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestOutput:
    def test_format_rational(self):
        assert format_rational(Fraction(3)) == "3"
        assert format_rational(Fraction(-15, 4)) == "-15/4"

    def test_jsonable(self):
        assert jsonable({"a": (Fraction(1, 2), None, True)}) == {"a": ["1/2", None, True]}

    def test_csv_cells(self):
        doc = OutputDocument("csv", {}, header=["x", "y"], rows=[[Fraction(1, 3), None], [True, 2]])
        assert doc.render() == 'x,y\n"1/3",\nyes,2\n'

    def test_csv_quotes_only_non_integer_rationals(self):
        doc = OutputDocument("csv", {}, rows=[[Fraction(-15, 4), Fraction(6), "a,b", ""]])
        assert doc.render() == '"-15/4",6,"a,b",\n'

    def test_parse_rationals(self):
        assert parse_rationals('{"v": ["1/2", "x"], "n": 3}') == {"v": [Fraction(1, 2), "x"], "n": 3}


class TestWeightsCommand:
    def test_shor_laflamme_default(self, capsys):
        code, out, _ = invoke(capsys, "weights", "--n", "6", "--k", "0", "--D", "2")
        assert code == 0
        assert out == "1,0,0,0,45,0,18\n"

    def test_unitary(self, capsys):
        _, out, _ = invoke(capsys, "weights", "--n", "6", "--k", "0", "--D", "2", "--kind", "unitary")
        assert out == "1,3,15/4,5/2,15/4,3,1\n"

    def test_explicit_dimension(self, capsys):
        _, out, _ = invoke(capsys, "weights", "--n", "5", "--K", "2", "--D", "2")
        assert out == "4,0,0,0,60,0\n"

    def test_dimension_not_a_power(self, capsys):
        code, out, err = invoke(capsys, "weights", "--n", "5", "--K", "3", "--D", "2")
        assert code == 2
        assert out == ""
        assert "[ERROR]" in err

    def test_odd_ame(self, capsys):
        _, out, _ = invoke(capsys, "weights", "--n", "5", "--k", "0", "--D", "2", "--kind", "unitary")
        assert out == "1,5/2,5/2,5/2,5/2,1\n"

    def test_json_round_trip(self, capsys):
        _, out, _ = invoke(capsys, "weights", "--n", "5", "--k", "1", "--D", "2",
                           "--kind", "unitary", "--format", "json")
        document = parse_rationals(out)
        assert document["values"] == [4, 10, 10, 5, 5, 2]
        assert document["code"] == "[[5,1,3]]"
        w = WeightDistribution.build(2, WeightKind.UNITARY_PRIMARY, document["trace"], document["values"])
        assert w.total() == 36

    def test_deterministic(self, capsys):
        argv = ("weights", "--n", "10", "--k", "2", "--D", "3", "--format", "json")
        _, first, _ = invoke(capsys, *argv)
        _, second, _ = invoke(capsys, *argv)
        assert first == second


class TestShadowCommand:
    def test_ame4_qubits(self, capsys):
        code, out, _ = invoke(capsys, "shadow", "--n", "4", "--k", "0", "--D", "2")
        assert code == 0
        assert out == "-1/2,0,9,0,15/2\n"

    def test_negative_entries_in_json(self, capsys):
        _, out, _ = invoke(capsys, "shadow", "--n", "4", "--k", "0", "--D", "2", "--format", "json")
        assert parse_rationals(out)["negative"] == [[0, Fraction(-1, 2)]]


class TestCheckCommand:
    def test_excluded_exit_code(self, capsys):
        code, out, _ = invoke(capsys, "check", "9", "3", "4", "3", "--format", "json")
        assert code == 1
        document = parse_rationals(out)
        assert document["status"] == "excluded"
        assert document["reason"] == "shadow"
        assert document["witness"]["j"] == 0
        assert document["witness"]["value"] < 0

    def test_known_code(self, capsys):
        code, out, _ = invoke(capsys, "check", "5", "1", "3", "2")
        assert code == 0
        assert out == "[[5,1,3]]_2  not-excluded  [Rains]\n"

    def test_explicit_dimension(self, capsys):
        code, _, _ = invoke(capsys, "check", "5", "2", "3", "2", "--K")
        assert code == 0
        code, out, _ = invoke(capsys, "check", "3", "3", "2", "2", "--K", "--format", "json")
        assert code == 1
        document = parse_rationals(out)
        assert document["reason"] == "singleton"
        assert document["k"] is None
        assert document["K"] == 3

    def test_csv(self, capsys):
        _, out, _ = invoke(capsys, "check", "4", "0", "3", "2", "--format", "csv")
        assert out.splitlines() == [
            "code,D,status,reason,witness_j,witness_value,citation",
            '"[[4,0,3]]",2,excluded,shadow,0,"-1/2",',
        ]

    def test_invalid_distance(self, capsys):
        code, _, err = invoke(capsys, "check", "4", "0", "9", "2")
        assert code == 2
        assert "distance" in err


class TestFamilyCommand:
    def test_first_line(self, capsys):
        code, out, _ = invoke(capsys, "family", "12", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "family n+k=12 D=3: upper [[8,4,3]]"
        assert len(lines) == 8

    def test_odd_sum(self, capsys):
        code, _, err = invoke(capsys, "family", "11", "3")
        assert code == 2
        assert "even" in err

    def test_json_members(self, capsys):
        _, out, _ = invoke(capsys, "family", "4", "2", "--format", "json")
        document = parse_rationals(out)
        assert document["upper"] == "[[3,1,2]]"
        assert [m["status"] for m in document["members"]] == ["excluded", "trivial", "trivial"]


class TestOracleCommand:
    def test_shor(self, capsys):
        code, out, _ = invoke(capsys, "oracle", "shor")
        assert code == 0
        lines = out.splitlines()
        assert "A: 4,0,36,0,108,0,300,0,576,0" in lines
        assert "B: 2,0,18,78,54,414,150,666,288,378" in lines
        assert "distance: 3" in lines
        assert "pure: no" in lines

    def test_reduced(self, capsys):
        _, out, _ = invoke(capsys, "oracle", "shor", "--reduce", "9", "--format", "json")
        document = parse_rationals(out)
        assert document["A"] == [16, 0, 112, 0, 240, 0, 400, 0, 256]
        assert document["B"] == [4, 8, 80, 152, 520, 568, 1136, 808, 820]
        assert document["distance"] == 1

    def test_purified(self, capsys):
        code, out, _ = invoke(capsys, "oracle", "shor", "--purify", "--format", "json")
        assert code == 0
        document = parse_rationals(out)
        assert document["n"] == 10
        assert document["K"] == 1
        assert document["distance"] == 2

    def test_dense_cross_check(self, capsys):
        code, out, _ = invoke(capsys, "oracle", "five_qubit", "--dense")
        assert code == 0
        assert "distance: 3" in out.splitlines()

    def test_dense_budget(self, capsys):
        code, _, err = invoke(capsys, "oracle", "shor", "--dense")
        assert code == 2
        assert "budget" in err

    def test_dense_with_reduce(self, capsys):
        code, _, _ = invoke(capsys, "oracle", "ghz3", "--dense", "--reduce", "1")
        assert code == 2

    def test_bad_site(self, capsys):
        code, _, _ = invoke(capsys, "oracle", "ghz3", "--reduce", "7")
        assert code == 2

    def test_malformed_fixture(self, capsys, tmp_path):
        path = tmp_path / "bad.stab"
        path.write_text("prime 2\n[stabilizer]\n+ Q\n")
        code, out, err = invoke(capsys, "oracle", str(path))
        assert code == 2
        assert out == ""
        assert "bad.stab:3" in err

    @patch(f"{MODULE}.group_sl_weights")
    def test_inconsistent_weights(self, mock_weights, capsys):
        mock_weights.return_value = (
            WeightDistribution.build(2, WeightKind.SL_PRIMARY, 1, [1, 1]),
            WeightDistribution.build(2, WeightKind.SL_DUAL, 1, [1, 0]),
        )
        code, out, _ = invoke(capsys, "oracle", "bell")
        assert code == 3
        assert out == ""
        mock_weights.assert_called_once()


class TestCatalogCommand:
    def test_listing(self, capsys):
        code, out, _ = invoke(capsys, "catalog", "3", "--sum", "12")
        assert code == 0
        assert any(line.startswith("[[8,4,3]]") and "single-error" in line
                   for line in out.splitlines())

    def test_bad_catalog_path(self, capsys, tmp_path):
        code, _, err = invoke(capsys, "check", "5", "1", "3", "2",
                              "--catalog", str(tmp_path / "absent.jsonl"))
        assert code == 2
        assert "cannot read" in err


class TestUsage:
    def test_unknown_flag(self, capsys):
        code, _, err = invoke(capsys, "weights", "--bogus")
        assert code == 2
        assert "Error:" in err

    def test_missing_subcommand(self, capsys):
        assert invoke(capsys)[0] == 2

    def test_config_error(self, capsys, tmp_path, monkeypatch):
        config = tmp_path / "config.json"
        config.write_text('{"output": {"default_format": "xml"}}')
        monkeypatch.setenv("QWEIGHT_CONFIG", str(config))
        set_settings(None)
        with patch("qweight.shared.config.load_dotenv"):
            code, _, err = invoke(capsys, "family", "8", "3")
        assert code == 2
        assert "default_format" in err


@pytest.mark.parametrize("argv", [
    ("weights", "--n", "6", "--k", "0", "--D", "2", "--format", "csv"),
    ("family", "8", "3", "--format", "csv"),
    ("table", "--D", "3", "--max", "8", "--format", "csv"),
])
def test_csv_has_header(argv, capsys):
    _, out, _ = invoke(capsys, *argv)
    assert "," in out.splitlines()[0]
