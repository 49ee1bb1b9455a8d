"""
Tests for the series-versus-oracle cross-check.

Every registered generating function is compared with brute-force counts;
the long runs reproduce the full table (n <= 12, n <= 14 for W).
"""

import pytest

from weakly_directed_walks.lattice.models import Model
from weakly_directed_walks.oracle.cross_check import (
    COUNT_CLASSES,
    CheckIssue,
    CheckResult,
    CheckSeverity,
    CountRow,
    CrossChecker,
    get_count_class,
)
from weakly_directed_walks.oracle.enumerator import WalkEnumerator


class TestCheckResult:
    """Tests for CheckResult."""

    def test_initially_valid(self):
        """A new result has no issues."""
        result = CheckResult(valid=True)
        assert result.valid is True
        assert result.errors == []
        assert result.mismatches == []

    def test_add_error_makes_invalid(self):
        """Adding an ERROR issue makes the result invalid."""
        result = CheckResult(valid=True)
        result.add_issue(CheckIssue(code="TEST", message="x", severity=CheckSeverity.ERROR))
        assert result.valid is False
        assert len(result.errors) == 1

    def test_add_info_stays_valid(self):
        """INFO and WARNING issues leave validity alone."""
        result = CheckResult(valid=True)
        result.add_issue(CheckIssue(code="A", message="x", severity=CheckSeverity.INFO))
        result.add_issue(CheckIssue(code="B", message="y", severity=CheckSeverity.WARNING))
        assert result.valid is True
        assert result.errors == []


class TestCountRow:
    """Tests for CountRow."""

    def test_match(self):
        """A row matches when coefficient equals oracle count."""
        assert CountRow(3, "T", Model.HORIZONTAL, 17, 17).match
        assert not CountRow(3, "T", Model.HORIZONTAL, 17, 16).match

    def test_to_dict_keys(self):
        """Keys follow the CSV header."""
        row = CountRow(2, "W", Model.HORIZONTAL, 3, 3).to_dict()
        assert list(row) == ["n", "class", "model", "coefficient", "oracle", "match"]
        assert row["model"] == "horizontal"


class TestCountClasses:
    """Registry of series/oracle pairs."""

    def test_expected_classes(self):
        """All checked classes are registered."""
        expected = {
            "W", "Wbar", "W_diag", "B", "B0", "B1", "B2",
            "T", "P", "Q", "Ti", "Pi", "Qi", "I", "I_diag",
        }
        assert set(COUNT_CLASSES) == expected

    def test_unknown_class(self):
        """Unknown names raise ValueError listing the known ones."""
        with pytest.raises(ValueError, match="known"):
            get_count_class("Z")

    @pytest.mark.parametrize("name", sorted(COUNT_CLASSES))
    def test_class_matches_oracle_small(self, name):
        """Every class agrees with the oracle up to length 8."""
        count_class = get_count_class(name)
        enumerator = WalkEnumerator(max_length=8)
        assert count_class.coefficients(8) == count_class.oracle_counts(enumerator, 8)

    def test_hand_counts(self):
        """Pseudo-bridge counts checked by hand."""
        assert get_count_class("B").coefficients(3) == [1, 2, 4, 8]
        assert get_count_class("T").coefficients(3) == [1, 3, 7, 17]


class TestCrossChecker:
    """Tests for CrossChecker."""

    def test_small_run_valid(self):
        """A short run over all classes and theorems passes."""
        result = CrossChecker(theorem_max_n=6).run(6)
        assert result.valid, [i.message for i in result.errors]
        assert len(result.rows) == 7 * len(COUNT_CLASSES)
        assert result.metadata["max_n"] == 6
        assert result.metadata["rows"] == len(result.rows)

    def test_witness_reported(self):
        """The diagonal witness shows up as an INFO issue."""
        result = CrossChecker(theorem_max_n=4).run(4, names=["T"])
        codes = {i.code for i in result.issues}
        assert "DIAGONAL_WITNESS" in codes
        assert result.valid

    def test_selected_classes(self):
        """Restricting to some classes restricts the rows."""
        result = CrossChecker().run(5, names=["P", "Q"], theorems=False)
        assert {r.name for r in result.rows} == {"P", "Q"}
        assert result.issues == []

    def test_mismatch_reported(self, monkeypatch):
        """A wrong coefficient produces a COUNT_MISMATCH error."""
        count_class = get_count_class("T")
        monkeypatch.setattr(
            type(count_class), "coefficients", lambda self, max_n: [1] * (max_n + 1)
        )
        result = CrossChecker().run(3, names=["T"], theorems=False)
        assert not result.valid
        assert {i.code for i in result.errors} == {"COUNT_MISMATCH"}
        assert len(result.mismatches) == 3

    def test_status_messages(self):
        """Progress flows through on_status."""
        messages = []
        CrossChecker(on_status=messages.append).run(3, names=["T"], theorems=False)
        assert any("checking T" in m for m in messages)


@pytest.mark.slow
class TestFullCrossCheck:
    """The full table."""

    def test_all_classes_to_twelve(self):
        """Every series matches brute force for n <= 12, theorems included."""
        result = CrossChecker(theorem_max_n=10).run(12)
        assert result.valid, [i.message for i in result.errors]

    def test_weakly_bridges_to_fourteen(self):
        """Horizontal weakly directed bridges agree up to n = 14."""
        result = CrossChecker().run(14, names=["W"], theorems=False)
        assert result.valid
