"""Tests for checking engines against the oracles."""

import pytest

from blockpoly.generators import block_chain, complete_graph, path_graph, random_float_matrix
from blockpoly.runner import verify_matrix
from blockpoly.verify import verify
from tests.conftest import M1


class TestVerify:
    """Test verify()."""

    def test_m1(self, m1):
        """Test all nine exact checks on M1 agree."""
        reports = verify(m1, subject="m1")
        assert len(reports) == 9
        assert all(r.equal for r in reports)
        assert {r.oracle for r in reports} == {"leibniz"}
        assert {r.subject for r in reports} == {"m1"}
        assert {(r.quantity, r.engine) for r in reports if r.quantity == "det"} == {
            ("det", "theorem"),
            ("det", "recursive"),
            ("det", "schur"),
        }

    def test_block_graph_adds_engine(self):
        """Test simple block graphs are also checked by the block-graph engine."""
        reports = verify(complete_graph(4))
        assert len(reports) == 10
        assert any(r.engine == "blockgraph" for r in reports)
        assert all(r.equal for r in reports)

    def test_float_matrix(self, rng):
        """Test float inputs are checked against Leibniz and Faddeev-LeVerrier."""
        reports = verify(random_float_matrix(rng, 4))
        assert len(reports) == 11
        assert sum(1 for r in reports if r.oracle == "faddeev-leverrier") == 2
        assert all(r.equal for r in reports), [str(r) for r in reports if not r.equal]

    def test_above_leibniz_cap(self):
        """Test exact order 11 is only checked against Faddeev-LeVerrier."""
        reports = verify(block_chain([complete_graph(3)] * 5))
        assert [r.oracle for r in reports] == ["faddeev-leverrier"] * 2
        assert all(r.equal for r in reports)

    def test_above_every_cap(self):
        """Test nothing is checked above order 30."""
        assert verify(block_chain([path_graph(2)] * 31)) == []

    def test_accepts_matrix(self):
        """Test a plain matrix is accepted."""
        assert all(r.equal for r in verify(M1))


class TestVerifyMatrix:
    """Test the verify_matrix() convenience function."""

    def test_ok(self):
        """Test an agreeing matrix gives no messages."""
        assert verify_matrix(M1) == (True, [])

    def test_error(self):
        """Test a non-square matrix is reported, not raised."""
        ok, messages = verify_matrix([[1, 2]])
        assert not ok
        assert len(messages) == 1
        assert "square" in messages[0]

    def test_mode(self):
        """Test float mode can be forced on an integer matrix."""
        ok, messages = verify_matrix([[0, 1], [1, 0]], mode="complex")
        assert ok, messages


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
