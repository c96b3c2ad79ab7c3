import json
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from src.pairdist.cli import main
from src.pairdist.constants import EXIT_INCOMPLETE, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE


def _invoke(*args: str):
    return CliRunner().invoke(main, list(args))


def _tsv(stdout: str) -> list[dict[str, str]]:
    header, *rows = stdout.strip("\n").split("\n")
    columns = header.split("\t")
    return [dict(zip(columns, row.split("\t"))) for row in rows]


class TestTable:
    def test_tsv(self):
        result = _invoke("table", "--p", "2", "--e", "1", "--format", "tsv")
        assert result.exit_code == EXIT_OK
        rows = _tsv(result.stdout)
        assert [row["i"] for row in rows] == ["0", "1", "2"]
        assert [row["dim"] for row in rows] == ["2", "1", "0"]
        assert [row["d_h"] for row in rows] == ["1", "2", "0"]
        assert [row["d_p"] for row in rows] == ["2", "2", "0"]
        assert [row["mds_pair"] for row in rows] == ["true", "false", "false"]

    def test_json(self):
        result = _invoke("table", "--p", "3", "--e", "2", "--format", "json")
        assert result.exit_code == EXIT_OK
        payload = json.loads(result.stdout)
        assert [row["d_p"] for row in payload] == [2, 3, 4, 4, 6, 6, 6, 9, 9, 0]
        assert list(payload[0]) == ["i", "dim", "d_h", "d_p", "branch", "mds_pair"]

    def test_extension_field(self):
        result = _invoke("table", "--p", "2", "--e", "2", "--m", "2", "--format", "json")
        assert result.exit_code == EXIT_OK
        assert [row["d_p"] for row in json.loads(result.stdout)] == [2, 3, 4, 4, 0]

    def test_logs_stay_off_stdout(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("PAIRDIST_DEBUG", "true")
        result = _invoke("table", "--p", "2", "--e", "1", "--format", "json")
        assert result.exit_code == EXIT_OK
        json.loads(result.stdout)
        assert "[pairdist]" in result.stderr

    @pytest.mark.parametrize(
        "args",
        [
            ("table", "--p", "4", "--e", "1"),
            ("table", "--p", "3", "--e", "0"),
            ("table", "--p", "2", "--e", "1", "--m", "2", "--modulus", "1,1"),
            ("table", "--p", "2", "--e", "1", "--m", "2", "--modulus", "1,0,1"),
        ],
    )
    def test_invalid_parameters(self, args):
        assert _invoke(*args).exit_code == EXIT_USAGE


    def test_verify_column(self):
        result = _invoke("table", "--p", "3", "--e", "2", "--verify", "--format", "tsv")
        assert result.exit_code == EXIT_OK
        rows = _tsv(result.stdout)
        assert len(rows) == 10
        assert {row["verified"] for row in rows} == {"match"}

    def test_verify_over_budget_exits_incomplete(self):
        result = _invoke(
            "table", "--p", "3", "--e", "2", "--verify", "--max-enum", "100", "--format", "tsv"
        )
        assert result.exit_code == EXIT_INCOMPLETE
        rows = _tsv(result.stdout)
        assert [row["verified"] for row in rows[:5]] == ["skipped"] * 5
        assert rows[-1]["verified"] == "match"

    def test_plain_table_has_no_verified_column(self):
        result = _invoke("table", "--p", "2", "--e", "1", "--format", "tsv")
        assert "verified" not in result.stdout.split("\n")[0]


class TestInvalidParameters:
    @pytest.mark.parametrize("command", ["table", "verify", "mds", "witnesses"])
    @pytest.mark.parametrize("e", ["-1", "0"])
    def test_exponent_below_one(self, command, e):
        result = _invoke(command, "--p", "3", "--e", e)
        assert result.exit_code == EXIT_USAGE
        assert "Traceback" not in result.output

    @pytest.mark.parametrize("e", ["-1", "0"])
    def test_simulate_exponent_below_one(self, e):
        result = _invoke(
            "simulate", "--p", "3", "--e", e, "--i", "0", "--t", "0", "--trials", "1", "--seed", "1"
        )
        assert result.exit_code == EXIT_USAGE

    def test_zero_extension_degree(self):
        assert _invoke("table", "--p", "3", "--e", "1", "--m", "0").exit_code == EXIT_USAGE


class TestOutputFormatResolution:
    def test_group_option(self):
        result = _invoke("--format", "tsv", "table", "--p", "2", "--e", "1")
        assert result.stdout.startswith("i\tdim\t")

    def test_subcommand_option_wins(self):
        result = _invoke("--format", "tsv", "table", "--p", "2", "--e", "1", "--format", "json")
        json.loads(result.stdout)

    def test_env_default(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("PAIRDIST_FORMAT", "TSV")
        result = _invoke("table", "--p", "2", "--e", "1")
        assert result.stdout.startswith("i\tdim\t")

    def test_pretty_is_the_default(self):
        lines = _invoke("table", "--p", "2", "--e", "1").stdout.split("\n")
        assert lines[0].split() == ["i", "dim", "d_h", "d_p", "branch", "mds_pair"]
        assert set(lines[1]) <= {"-", " "}

    def test_bad_env_config_is_a_usage_error(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("PAIRDIST_JOBS", "0")
        result = _invoke("table", "--p", "2", "--e", "1")
        assert result.exit_code == EXIT_USAGE
        assert "Invalid [tool.pairdist] configuration" in result.stderr


class TestVerify:
    def test_match(self):
        result = _invoke("verify", "--p", "3", "--e", "2", "--format", "tsv")
        assert result.exit_code == EXIT_OK
        rows = _tsv(result.stdout)
        assert {row["status"] for row in rows} == {"match"}
        assert [row["oracle_dp"] for row in rows] == ["2", "3", "4", "4", "6", "6", "6", "9", "9", "0"]

    def test_budget_skip_exits_incomplete(self):
        result = _invoke("verify", "--p", "3", "--e", "2", "--max-enum", "100", "--format", "tsv")
        assert result.exit_code == EXIT_INCOMPLETE
        rows = _tsv(result.stdout)
        assert [row["status"] for row in rows[:5]] == ["skipped"] * 5
        assert rows[0]["oracle_dp"] == "-"

    def test_mismatch_exits_one(self):
        with patch("src.pairdist.oracle.closed_form_pair_distance", return_value=1):
            result = _invoke("verify", "--p", "2", "--e", "1", "--format", "tsv")
        assert result.exit_code == EXIT_MISMATCH
        assert "mismatch" in result.stderr

    def test_jobs_do_not_change_output(self):
        args = ("verify", "--p", "2", "--e", "3", "--format", "json")
        assert _invoke(*args).stdout == _invoke(*args, "--jobs", "3").stdout


class TestWeight:
    def test_examples(self):
        result = _invoke("weight", "--p", "3", "--vector", "2,1,0,0,0,0,0,0,0", "--format", "tsv")
        assert result.exit_code == EXIT_OK
        assert _tsv(result.stdout) == [
            {
                "n": "9",
                "omega_h": "2",
                "omega_p": "3",
                "pairs": "(2,1) (1,0) (0,0) (0,0) (0,0) (0,0) (0,0) (0,0) (0,2)",
            }
        ]

    def test_separated_support(self):
        result = _invoke("weight", "--p", "2", "--vector", "1,0,1,0,0", "--format", "json")
        record = json.loads(result.stdout)[0]
        assert (record["omega_h"], record["omega_p"]) == (2, 4)

    @pytest.mark.parametrize("vector", ["1,a", "1,-1", "2,0", "1"])
    def test_bad_vectors(self, vector):
        assert _invoke("weight", "--p", "2", "--vector", vector).exit_code == EXIT_USAGE


class TestPairDistance:
    @pytest.mark.parametrize(
        "x, expected",
        [
            ("1,0,0,0,1", {"d_h": 2, "l": 1, "d_p": 3, "identity": "holds"}),
            ("1,0,1,0,0", {"d_h": 2, "l": 2, "d_p": 4, "identity": "holds"}),
            ("1,1,1,1,1", {"d_h": 5, "l": 1, "d_p": 5, "identity": "holds"}),
            ("0,0,0,0,0", {"d_h": 0, "l": 0, "d_p": 0, "identity": None}),
        ],
    )
    def test_against_zero(self, x, expected):
        result = _invoke(
            "pairdist", "--p", "2", "--x", x, "--y", "0,0,0,0,0", "--format", "json"
        )
        assert result.exit_code == EXIT_OK
        assert json.loads(result.stdout) == [expected]

    def test_length_mismatch(self):
        result = _invoke("pairdist", "--p", "2", "--x", "1,0", "--y", "1,0,0")
        assert result.exit_code == EXIT_USAGE


class TestMds:
    def test_lists_mds_exponents(self):
        result = _invoke("mds", "--p", "3", "--e", "2", "--format", "tsv")
        assert result.exit_code == EXIT_OK
        assert _tsv(result.stdout) == [
            {"i": "0", "dimension": "9", "d_p": "2"},
            {"i": "1", "dimension": "8", "d_p": "3"},
            {"i": "2", "dimension": "7", "d_p": "4"},
            {"i": "4", "dimension": "5", "d_p": "6"},
            {"i": "7", "dimension": "2", "d_p": "9"},
        ]

    def test_length_p(self):
        result = _invoke("mds", "--p", "5", "--e", "1", "--format", "json")
        assert [row["i"] for row in json.loads(result.stdout)] == [0, 1, 2, 3]


class TestSimulate:
    def test_guaranteed_regime(self):
        result = _invoke(
            "simulate", "--p", "3", "--e", "2", "--i", "4", "--t", "2",
            "--trials", "20", "--seed", "1", "--format", "json",
        )  # fmt: skip
        assert result.exit_code == EXIT_OK
        record = json.loads(result.stdout)[0]
        assert record["d_p"] == 6
        assert record["guarantee_radius"] == 2
        assert record["successes"] == 20
        assert record["success_rate"] == 1.0

    def test_is_reproducible(self):
        args = (
            "simulate", "--p", "2", "--e", "3", "--i", "2", "--t", "3",
            "--trials", "30", "--seed", "5", "--format", "tsv",
        )  # fmt: skip
        assert _invoke(*args).stdout == _invoke(*args, "--jobs", "2").stdout

    def test_seed_is_required(self):
        result = _invoke("simulate", "--p", "2", "--e", "2", "--i", "1", "--t", "1")
        assert result.exit_code == EXIT_USAGE

    def test_zero_dimensional_code(self):
        result = _invoke(
            "simulate", "--p", "2", "--e", "2", "--i", "4", "--t", "0", "--seed", "1"
        )
        assert result.exit_code == EXIT_USAGE

    def test_codebook_over_budget(self):
        result = _invoke(
            "simulate", "--p", "3", "--e", "2", "--i", "1", "--t", "1",
            "--seed", "1", "--max-enum", "10",
        )  # fmt: skip
        assert result.exit_code == EXIT_INCOMPLETE


class TestWitnesses:
    def test_all_hold(self):
        result = _invoke("witnesses", "--p", "3", "--e", "2", "--format", "tsv")
        assert result.exit_code == EXIT_OK
        rows = _tsv(result.stdout)
        assert rows
        assert {row["holds"] for row in rows} == {"true"}


class TestProp22:
    def test_exhaustive(self):
        result = _invoke("prop22", "--p", "2", "--n", "5", "--format", "json")
        assert result.exit_code == EXIT_OK
        assert json.loads(result.stdout) == [
            {"q": 2, "n": 5, "mode": "exhaustive", "pairs_checked": 32 * 31, "violations": 0}
        ]

    def test_sampled(self):
        result = _invoke(
            "prop22", "--p", "3", "--n", "10", "--sample", "100", "--seed", "3", "--format", "json"
        )
        assert result.exit_code == EXIT_OK
        record = json.loads(result.stdout)[0]
        assert record["mode"] == "sample"
        assert 0 < record["pairs_checked"] <= 100

    def test_exhaustive_limit(self):
        assert _invoke("prop22", "--p", "3", "--n", "7").exit_code == EXIT_USAGE

    def test_sample_needs_seed(self):
        assert _invoke("prop22", "--p", "2", "--n", "5", "--sample", "10").exit_code == EXIT_USAGE
