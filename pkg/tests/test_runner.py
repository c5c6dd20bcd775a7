"""Tests for the command runner and its convenience functions."""

import logging

import pytest

from blockpoly.bench import BenchConfig
from blockpoly.report import RunError, RunReport
from blockpoly.runner import BlockPolyRunner, RunConfig, run_file, run_matrix
from tests.conftest import DET_M1, M1, PER_M1, PHI_M1, PSI_M1

P5 = [[1 if abs(i - j) == 1 else 0 for j in range(5)] for i in range(5)]
K3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


class TestPolynomialCommands:
    """Test charpoly and permpoly."""

    def test_charpoly(self):
        """Test φ(M1) with its removal-sum terms."""
        report = run_matrix(M1, "charpoly")
        assert report.success
        assert report.order == 7
        assert report.mode == "int"
        assert report.result["polynomial"] == {"mode": "int", "coeffs": list(PHI_M1)}
        assert report.result["text"].startswith("-λ^7 + 4λ^6 - 56λ^5")
        removed = sorted(tuple(t["removed"]) for t in report.result["terms"])
        assert removed == [(), (2,), (2, 6), (6,)]

    def test_permpoly_recursive(self):
        """Test ψ(M1) through the recursive engine, which reports no terms."""
        report = run_matrix(M1, "permpoly", engine="recursive")
        assert report.result["polynomial"]["coeffs"] == list(PSI_M1)
        assert "terms" not in report.result

    def test_scalar_engine_refused(self):
        """Test polynomial commands refuse determinant-only engines."""
        report = run_matrix(M1, "charpoly", engine="schur")
        assert not report.success
        assert "not available" in report.errors[0].message


class TestScalarCommands:
    """Test det, per and schur-det."""

    def test_det_and_per(self):
        """Test det(M1) and per(M1)."""
        assert run_matrix(M1, "det").result["value"] == DET_M1
        assert run_matrix(M1, "per").result["value"] == PER_M1

    def test_det_blockgraph_explain(self):
        """Test the k-tuple explanation for K3."""
        report = run_matrix(K3, "det", engine="blockgraph", explain=True)
        assert report.result["value"] == 2
        assert report.result["explain"]["block_sizes"] == [3]

    def test_det_schur_explain(self):
        """Test the elimination steps for a graph without cut-vertices."""
        report = run_matrix([[0, 1, 2], [3, 1, 1], [1, 1, 1]], "det", engine="schur", explain=True)
        assert report.result["value"] == 2
        assert len(report.result["explain"]["steps"]) == 1

    def test_schur_det(self):
        """Test schur-det reports the rule, the steps and the heuristic check."""
        report = run_matrix([[0, 1, 2], [3, 1, 1], [1, 1, 1]], "schur-det", trace=True)
        assert report.result["value"] == 2
        assert report.result["pivot"] == "exhaustive"
        assert report.result["steps"][0]["case"] == "A1-singular-d-zero"
        assert report.result["heuristic"]["agrees"]

    def test_float_value(self):
        """Test float determinants are serialized as [re, im]."""
        report = run_matrix([[0.5, 1], [1, 0]], "det")
        assert report.mode == "complex"
        assert report.result["value"] == pytest.approx([-1.0, 0.0])


class TestStructureCommands:
    """Test blocks, bpartitions and singular-check."""

    def test_blocks(self):
        """Test the decomposition of M1 and its DOT text."""
        report = run_matrix(M1, "blocks", dot=True)
        assert report.decomposition["blocks"] == [[1, 2, 3], [2, 4, 5, 6], [6, 7]]
        assert report.decomposition["cut_vertices"] == [2, 6]
        assert report.decomposition["cut_index"] == {"2": 2, "6": 2}
        assert report.result["dot"].startswith("digraph G {")

    def test_bpartitions(self):
        """Test the four B-partitions of M1."""
        report = run_matrix(M1, "bpartitions")
        assert report.result["count"] == 4
        assert len(report.result["partitions"]) == 4
        first = report.result["partitions"][0]
        assert first["parts"] == [[1, 2, 3], [4, 5, 6], [7]]
        assert first["phi_summand"]["mode"] == "int"
        assert first["det_summand"] == first["phi_summand"]["coeffs"][0]
        assert "partitions" not in run_matrix(M1, "bpartitions", count_only=True).result

    def test_singular_check(self):
        """Test P5 meets the odd-tree condition."""
        report = run_matrix(P5, "singular-check")
        assert report.result == {"conditions": [4], "singular_implied": True, "determinant": 0}

    def test_singular_check_needs_simple_graph(self):
        """Test M1 is refused by singular-check."""
        report = run_matrix(M1, "singular-check")
        assert not report.success
        assert "simple" in report.errors[0].message


class TestVerifyCommand:
    """Test verify through the runner."""

    def test_verify(self):
        """Test no mismatches on M1."""
        report = run_matrix(M1, "verify")
        assert report.success
        assert report.mismatches == 0
        assert report.exit_status == 0
        assert len(report.result["reports"]) == 9


class TestErrors:
    """Test errors are recorded in the report."""

    @pytest.mark.parametrize(
        "options,message",
        [
            ({"command": "gauss"}, "Unknown command"),
            ({"command": "det", "mode": "float"}, "Unsupported mode"),
            ({"command": "det", "workers": 0}, "positive"),
            ({"command": "det", "engine": "gauss"}, "not available"),
        ],
    )
    def test_bad_config(self, options, message):
        """Test configuration errors."""
        report = BlockPolyRunner().run(RunConfig(matrix=M1, **options))
        assert not report.success
        assert message in report.errors[0].message
        assert report.exit_status == 1

    def test_no_input(self):
        """Test a command without a matrix."""
        report = BlockPolyRunner().run(RunConfig(command="det"))
        assert "No input" in report.errors[0].message

    def test_not_square(self):
        """Test a rectangular matrix."""
        report = run_matrix([[1, 2, 3], [4, 5, 6]], "det")
        assert "square" in report.errors[0].message

    def test_exact_mode_on_floats(self):
        """Test exact mode refuses fractional entries."""
        report = run_matrix([[0.5]], "det", mode="int")
        assert "not an integer" in report.errors[0].message

    def test_format_error_position(self, tmp_path):
        """Test file format errors keep their line and column."""
        path = tmp_path / "bad.csv"
        path.write_text("1, 2\n3,,4\n")
        report = run_file(str(path), "det")
        assert (report.errors[0].line, report.errors[0].column) == (2, 3)
        assert report.errors[0].message == "Empty field"

    def test_missing_file(self, tmp_path):
        """Test a missing file is an I/O error."""
        report = run_file(str(tmp_path / "missing.csv"), "det")
        assert report.errors[0].message.startswith("Error reading file")


class TestRunFile:
    """Test run_file()."""

    def test_fixture(self, fixtures_dir):
        """Test det of the M1 fixture with file metadata."""
        path = fixtures_dir / "m1.mtx"
        report = run_file(str(path), "det")
        assert report.result["value"] == DET_M1
        assert report.subject == "m1.mtx"
        assert report.source_file_path == str(path.resolve())
        assert {"read", "decompose", "command"} <= set(report.timing)

    def test_verbose_logs_stages(self, fixtures_dir, caplog):
        """Test verbose runs log each stage."""
        with caplog.at_level(logging.INFO, logger="blockpoly.runner"):
            run_file(str(fixtures_dir / "m2.csv"), "det", verbose=True)
        assert "Stage 1: Reading matrix..." in caplog.text
        assert "Stage 3: det..." in caplog.text


class TestBenchCommand:
    """Test bench through the runner."""

    def test_bench(self):
        """Test rows and CSV for two instances."""
        config = RunConfig(command="bench", bench=BenchConfig(instances=2, seed=3))
        report = BlockPolyRunner().run(config)
        assert report.success
        assert len(report.result["rows"]) == 6
        assert report.result["csv"].startswith("instance,order,blocks")
        assert report.mismatches == 0


class TestReport:
    """Test report types."""

    def test_run_error_str(self):
        """Test errors with and without a position."""
        assert str(RunError(2, 3, "Empty field")) == "❌ Line 2, Column 3: Empty field"
        assert str(RunError(message="slow", severity="warning")) == "⚠️  slow"

    def test_exit_status(self):
        """Test success without mismatches is the only zero status."""
        assert RunReport("det", success=True).exit_status == 0
        assert RunReport("det", success=True, mismatches=1).exit_status == 1
        assert RunReport("det").exit_status == 1

    def test_to_json(self):
        """Test the JSON keys."""
        data = RunReport("det").to_json()
        assert data["command"] == "det"
        assert data["errors"] == []
        assert data["decomposition"] is None


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
