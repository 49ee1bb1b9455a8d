"""
Unit tests for CLI commands.

Commands run in-process through typer's CliRunner; heavy defaults are
overridden with small orders and truncations.
"""

import json

import pytest
from typer.testing import CliRunner

from weakly_directed_walks import __version__
from weakly_directed_walks.cli import EXIT_INVALID, EXIT_MISMATCH, EXIT_NO_CONVERGENCE, app
from weakly_directed_walks.oracle.cross_check import COUNT_CLASSES, get_count_class


runner = CliRunner()


class TestCLIHelp:
    """Tests for CLI help output."""

    def test_main_help(self):
        """Main help should list the commands."""
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        for command in ("count", "gf", "mu", "moments", "zeros", "sample", "check"):
            assert command in result.output

    def test_no_command_shows_help(self):
        """Running without a command prints help."""
        result = runner.invoke(app, [])
        assert result.exit_code == 0
        assert "Usage" in result.output

    @pytest.mark.parametrize("command", ["count", "gf", "mu", "moments", "zeros", "sample", "check"])
    def test_command_help(self, command):
        """Every command has help."""
        result = runner.invoke(app, [command, "--help"])
        assert result.exit_code == 0

    def test_version(self):
        """--version prints the version."""
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output


class TestGfCommand:
    """Tests for the gf command."""

    def test_plain_coefficients(self):
        """T = 1 + 3t + 7t^2 + 17t^3 + ..."""
        result = runner.invoke(app, ["gf", "--series", "T", "--order", "3"])
        assert result.exit_code == 0
        assert "1, 3, 7, 17" in result.output

    def test_json(self):
        """JSON carries series, model, order and coefficients."""
        result = runner.invoke(app, ["--no-timestamp", "gf", "-s", "W", "-o", "2", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["series"] == "W"
        assert data["model"] == "horizontal"
        assert data["coefficients"] == [1, 1, 3]
        assert "timestamp" not in data["metadata"]

    def test_diagonal_model(self):
        """--model diagonal selects the diagonal variant of W."""
        result = runner.invoke(app, ["gf", "-s", "W", "-o", "1", "-m", "diagonal", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["series"] == "W_diag"
        assert data["coefficients"] == [1, 2]

    def test_unknown_series(self):
        """Unknown series names are validation errors."""
        result = runner.invoke(app, ["gf", "--series", "Z"])
        assert result.exit_code == EXIT_INVALID

    def test_negative_order(self):
        """Negative orders are validation errors."""
        result = runner.invoke(app, ["gf", "--order", "-1"])
        assert result.exit_code == EXIT_INVALID

    def test_unknown_model(self):
        """Only horizontal and diagonal are models."""
        result = runner.invoke(app, ["gf", "-s", "W", "--model", "square"])
        assert result.exit_code == EXIT_INVALID


class TestCountCommand:
    """Tests for the count command."""

    def test_table(self):
        """A matching class exits 0."""
        result = runner.invoke(app, ["count", "--class", "T", "--max-n", "4"])
        assert result.exit_code == 0
        assert "41" in result.output

    def test_csv(self, tmp_path):
        """CSV output uses the counts header."""
        path = tmp_path / "counts.csv"
        result = runner.invoke(app, ["count", "-c", "B", "-n", "3", "--csv", str(path)])
        assert result.exit_code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "n,class,model,coefficient,oracle,match"
        assert lines[1:] == [
            "0,B,horizontal,1,1,True",
            "1,B,horizontal,2,2,True",
            "2,B,horizontal,4,4,True",
            "3,B,horizontal,8,8,True",
        ]

    def test_json(self):
        """JSON rows follow the CSV columns."""
        result = runner.invoke(app, ["count", "-c", "P", "-n", "3", "--json"])
        assert result.exit_code == 0
        rows = json.loads(result.stdout)["rows"]
        assert len(rows) == 4
        assert all(r["match"] for r in rows)


class TestCheckCommand:
    """Tests for the check command."""

    def test_json_valid(self):
        """A short check is valid and has one row per class and length."""
        result = runner.invoke(app, ["check", "--max-n", "5", "--json", "--skip-theorems"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["valid"] is True
        assert len(data["rows"]) == 6 * len(COUNT_CLASSES)
        assert data["metadata"]["max_n"] == 5

    def test_table(self):
        """The summary names each selected class."""
        result = runner.invoke(app, ["check", "-n", "4", "-c", "T", "-c", "Q", "--skip-theorems"])
        assert result.exit_code == 0
        assert "All 10 coefficients match" in result.output

    def test_mismatch_exit_code(self, monkeypatch):
        """A failing comparison exits with code 1."""
        count_class = get_count_class("T")
        monkeypatch.setattr(
            type(count_class), "coefficients", lambda self, max_n: [0] * (max_n + 1)
        )
        result = runner.invoke(app, ["check", "-n", "3", "-c", "T", "--skip-theorems"])
        assert result.exit_code == EXIT_MISMATCH


class TestMuCommand:
    """Tests for mu and moments."""

    def test_json_reproducible(self):
        """With --no-timestamp two runs print identical JSON."""
        args = ["--no-timestamp", "mu", "--truncation", "120", "--json"]
        first = runner.invoke(app, args)
        second = runner.invoke(app, args)
        assert first.exit_code == 0
        assert first.stdout == second.stdout
        data = json.loads(first.stdout)
        assert data["truncation"] == 120
        assert data["mu"]["lo"] < 2.5448 and data["mu"]["hi"] > 2.5446

    def test_panel(self):
        """Without --json a panel is printed."""
        result = runner.invoke(app, ["mu", "-t", "120"])
        assert result.exit_code == 0
        assert "mu" in result.output

    def test_truncation_from_environment(self, isolated_config, monkeypatch):
        """WDW_TRUNCATION sets the default truncation."""
        monkeypatch.setenv("WDW_TRUNCATION", "120")
        result = runner.invoke(app, ["mu", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["truncation"] == 120

    def test_invalid_model(self):
        """Unknown models exit with code 2."""
        result = runner.invoke(app, ["mu", "--model", "square", "-t", "50"])
        assert result.exit_code == EXIT_INVALID

    def test_no_root(self):
        """A truncation too short to reach 1 exits with code 3."""
        result = runner.invoke(app, ["mu", "--truncation", "1"])
        assert result.exit_code == EXIT_NO_CONVERGENCE

    def test_moments_json(self):
        """moments reports rho, mean and variance."""
        result = runner.invoke(app, ["moments", "-t", "120", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert {"rho", "mean", "variance"} <= set(data)


class TestZerosCommand:
    """Tests for the zeros command."""

    def test_help_explains_residual(self):
        """The help says where the residual column is measured."""
        result = runner.invoke(app, ["zeros", "--help"])
        assert result.exit_code == 0
        assert "multi-precision" in result.stdout

    def test_csv_and_svg(self, tmp_path):
        """CSV header and one row per root; the SVG portrait is written."""
        csv_path, svg_path = tmp_path / "zeros.csv", tmp_path / "zeros.svg"
        result = runner.invoke(
            app, ["zeros", "--k", "5", "--csv", str(csv_path), "--svg", str(svg_path)]
        )
        assert result.exit_code == 0
        lines = csv_path.read_text().splitlines()
        assert lines[0] == "k,re,im,residual"
        assert len(lines) == 1 + 16
        assert svg_path.read_text().startswith("<svg")

    def test_json(self):
        """JSON includes the distance report for the horizontal family."""
        result = runner.invoke(app, ["zeros", "-k", "6", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["degree"] == 19
        assert data["distance"]["k"] == 6

    def test_invalid_k(self):
        """k = 0 is a validation error."""
        result = runner.invoke(app, ["zeros", "-k", "0"])
        assert result.exit_code == EXIT_INVALID


class TestSampleCommand:
    """Tests for the sample command."""

    def test_json(self):
        """Samples land in the window and carry their records."""
        result = runner.invoke(
            app,
            ["sample", "-n", "20", "-e", "0.5", "--seed", "1", "-c", "2", "-t", "300"],
        )
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["metadata"]["target_n"] == 20
        assert len(data["samples"]) == 2
        for record in data["samples"]:
            assert 10 <= record["length"] <= 30
            assert record["rng"] == "PCG64"

    def test_reproducible(self):
        """Same seed, same walks."""
        args = ["--no-timestamp", "sample", "-n", "20", "-e", "0.5", "--seed", "3", "-t", "300"]
        assert runner.invoke(app, args).stdout == runner.invoke(app, args).stdout

    def test_svg_files(self, tmp_path):
        """Several SVG samples go to numbered files."""
        output = tmp_path / "walk.svg"
        result = runner.invoke(
            app,
            ["sample", "-n", "20", "-e", "0.5", "-c", "2", "--format", "svg",
             "-o", str(output), "-t", "300"],
        )
        assert result.exit_code == 0
        for i in (1, 2):
            assert (tmp_path / f"walk-{i}.svg").read_text().startswith("<svg")

    def test_bad_format(self):
        """Unknown formats exit with code 2."""
        result = runner.invoke(app, ["sample", "--format", "png"])
        assert result.exit_code == EXIT_INVALID
