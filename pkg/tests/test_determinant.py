"""Tests for determinant and permanent entry points."""

import numpy as np
import pytest

from blockpoly.blocks import decompose
from blockpoly.determinant import (
    determinant,
    determinant_fast_path,
    has_looped_cut_vertex,
    permanent,
)
from blockpoly.digraph import digraph_of_matrix, matrix_of_digraph
from blockpoly.errors import ConfigError, DomainError
from blockpoly.generators import complete_graph, path_graph, random_planted_instance
from blockpoly.oracles import leibniz_det
from tests.conftest import DET_M1, DET_M2, M1, PER_M1, PER_M2


class TestDeterminant:
    """Test determinant() across engines."""

    @pytest.mark.parametrize("engine", ["theorem", "recursive", "oracle", "schur"])
    def test_m1(self, m1, engine):
        """Test det(M1) through every engine that accepts it."""
        assert determinant(m1, engine) == DET_M1

    def test_m2(self, m2):
        """Test det(M2)."""
        assert determinant(m2) == DET_M2

    def test_blockgraph_engine_needs_block_graph(self, m1):
        """Test the block-graph engine rejects weighted digraphs."""
        with pytest.raises(DomainError, match="block"):
            determinant(m1, "blockgraph")

    def test_blockgraph_engine(self):
        """Test det(K5) = 4 through the block-graph engine."""
        assert determinant(complete_graph(5), "blockgraph") == 4

    def test_unknown_engine(self, m1):
        """Test an unknown engine name is rejected."""
        with pytest.raises(ConfigError):
            determinant(m1, "gauss")


class TestPermanent:
    """Test permanent()."""

    @pytest.mark.parametrize("engine", ["theorem", "recursive", "oracle"])
    def test_m1(self, m1, engine):
        """Test per(M1) through the polynomial engines."""
        assert permanent(m1, engine) == PER_M1

    def test_m2(self, m2):
        """Test per(M2)."""
        assert permanent(m2) == PER_M2

    @pytest.mark.parametrize("engine", ["blockgraph", "schur"])
    def test_scalar_engines_rejected(self, m1, engine):
        """Test determinant-only engines cannot compute permanents."""
        with pytest.raises(ConfigError, match="permanents"):
            permanent(m1, engine)


class TestFastPath:
    """Test the B-partition sum without removal terms."""

    def test_loops_at_cut_vertices(self, m1):
        """Test M1 has loops at v2 and v6 and is refused."""
        assert has_looped_cut_vertex(m1)
        with pytest.raises(DomainError, match="carry loops"):
            determinant_fast_path(m1)

    def test_loop_free_cut_vertices(self):
        """Test the fast path once the cut-vertex loops are cleared."""
        rows = [row[:] for row in M1]
        rows[1][1] = 0
        rows[5][5] = 0
        graph = digraph_of_matrix(rows)
        assert not has_looped_cut_vertex(graph)
        assert determinant_fast_path(graph) == leibniz_det(matrix_of_digraph(graph))

    def test_simple_path(self):
        """Test det(P4) = 1 and det(P5) = 0."""
        assert determinant_fast_path(path_graph(4)) == 1
        assert determinant_fast_path(path_graph(5)) == 0

    def test_random_loop_free_cut_vertices(self):
        """Test fast path, full path and Leibniz agree once cut-vertex loops are cleared."""
        rng = np.random.default_rng(51)
        for _ in range(60):
            planted = random_planted_instance(rng, max_order=8)
            matrix = matrix_of_digraph(planted)
            index = {v: i for i, v in enumerate(planted.vertices)}
            for v in decompose(planted).cut_vertices:
                matrix[index[v], index[v]] = 0
            graph = digraph_of_matrix(matrix, labels=planted.vertices)
            assert decompose(graph).cut_vertices
            assert not has_looped_cut_vertex(graph)
            expected = leibniz_det(matrix)
            assert determinant_fast_path(graph) == expected
            assert determinant(graph) == expected


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
