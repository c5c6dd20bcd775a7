"""Tests for the seeded instance generators."""

import networkx as nx
import numpy as np
import pytest

from blockpoly.block_graph import is_block_graph
from blockpoly.blocks import block_count, decompose
from blockpoly.digraph import WeightedDigraph
from blockpoly.errors import DomainError
from blockpoly.generators import (
    block_chain,
    complete_graph,
    cycle_graph,
    glue,
    path_graph,
    planted_cut_digraph,
    random_block,
    random_block_graph,
    random_float_matrix,
    random_matrix,
    random_planted_instance,
    random_tree,
    relabel,
    singular_instance,
    singular_instances,
    singular_minor_matrix,
    star_graph,
)
from blockpoly.oracles import leibniz_det


class TestSimpleGraphs:
    """Test the named simple graphs and gluing."""

    def test_named_graphs(self):
        """Test orders, arc counts and simplicity."""
        assert complete_graph(4).order == 4
        assert len(complete_graph(4).edges) == 12
        assert len(cycle_graph(5).edges) == 10
        assert len(path_graph(4).edges) == 6
        assert star_graph(3).degree(1) == 3
        assert all(g.is_simple() for g in (complete_graph(3), cycle_graph(4), path_graph(2)))

    def test_relabel(self):
        """Test vertices and arcs follow the mapping."""
        moved = relabel(path_graph(2), {1: 5, 2: 9})
        assert moved.vertices == (5, 9)
        assert set(moved.edges) == {(5, 9), (9, 5)}

    def test_glue(self):
        """Test the glue vertex becomes the only cut-vertex."""
        graph = glue(complete_graph(3), path_graph(2), 2, 1)
        assert graph.vertices == (1, 2, 3, 4)
        assert graph.weight(2, 4) == 1
        assert decompose(graph).cut_vertices == (2,)

    def test_glue_adds_loops(self):
        """Test loop weights at the identified vertex are summed."""
        first = WeightedDigraph((1, 2), {(1, 1): 2, (1, 2): 1})
        second = WeightedDigraph((1, 2), {(1, 1): -2, (2, 1): 3})
        graph = glue(first, second, 1, 1)
        assert graph.loop(1) == 0
        assert graph.edges == {(1, 2): 1, (3, 1): 3}

    def test_glue_mode_mismatch(self):
        """Test exact and float digraphs cannot be glued."""
        with pytest.raises(DomainError, match="modes"):
            glue(WeightedDigraph((1,), {}, "complex"), path_graph(2), 1, 1)

    def test_block_chain(self):
        """Test three triangles in a row."""
        graph = block_chain([complete_graph(3)] * 3)
        assert graph.order == 7
        assert decompose(graph).cut_vertices == (3, 5)
        assert block_chain([]).order == 0


class TestRandomGraphs:
    """Test random simple graphs and digraphs."""

    @pytest.mark.parametrize("n", [1, 2, 7])
    def test_random_tree(self, rng, n):
        """Test a tree on n vertices."""
        tree = random_tree(rng, n)
        assert tree.number_of_nodes() == n
        assert nx.is_tree(tree)

    def test_random_block_graph(self, rng):
        """Test a tree of four cliques."""
        graph = random_block_graph(rng, 4)
        assert is_block_graph(graph)
        assert block_count(graph) == 4

    @pytest.mark.parametrize("size", range(2, 8))
    def test_random_block_is_biconnected(self, rng, size):
        """Test the underlying graph of a random block is 2-connected."""
        block = random_block(rng, size)
        assert block.vertices == tuple(range(1, size + 1))
        assert nx.is_biconnected(block.underlying_graph)

    def test_planted_cut_digraph(self, rng):
        """Test the planted blocks are exactly the blocks found."""
        graph = planted_cut_digraph(rng, [3, 4, 2])
        assert graph.order == 7
        assert block_count(graph) == 3

    def test_random_planted_instance(self, rng):
        """Test order and cut-vertex bounds."""
        for _ in range(20):
            graph = random_planted_instance(rng, max_order=8, max_cuts=3)
            assert graph.order <= 8
            assert 1 <= len(decompose(graph).cut_vertices) <= 3

    def test_seeded(self):
        """Test equal seeds give equal instances."""
        first = random_planted_instance(np.random.default_rng(11))
        second = random_planted_instance(np.random.default_rng(11))
        assert first == second


class TestRandomMatrices:
    """Test matrix generators."""

    def test_random_matrix(self):
        """Test Python int entries within range, reproducible from the seed."""
        matrix = random_matrix(np.random.default_rng(5), 4, low=-2, high=2)
        again = random_matrix(np.random.default_rng(5), 4, low=-2, high=2)
        assert matrix.tolist() == again.tolist()
        assert all(isinstance(x, int) and -2 <= x <= 2 for x in matrix.flat)

    def test_zero_density(self, rng):
        """Test density 0 gives the zero matrix."""
        assert not any(random_matrix(rng, 3, density=0.0).flat)

    def test_random_float_matrix(self, rng):
        """Test shape and dtype."""
        matrix = random_float_matrix(rng, 3)
        assert matrix.shape == (3, 3)
        assert matrix.dtype == np.float64

    @pytest.mark.parametrize("d", [0, 1, -1])
    def test_singular_minor_matrix(self, rng, d):
        """Test the trailing block is singular and the rest is positive."""
        matrix = singular_minor_matrix(rng, 5, d=d).tolist()
        assert matrix[0][0] == d
        assert leibniz_det([row[1:] for row in matrix[1:]]) == 0
        assert all(x > 0 for i, row in enumerate(matrix) for j, x in enumerate(row) if i or j)

    def test_singular_minor_matrix_order(self, rng):
        """Test orders below 3 are refused."""
        with pytest.raises(DomainError):
            singular_minor_matrix(rng, 2)


class TestSingularInstances:
    """Test the singular graph families."""

    @pytest.mark.parametrize("condition", [1, 2, 3, 4])
    def test_simple_and_connected(self, rng, condition):
        """Test instances are connected simple graphs."""
        for _ in range(5):
            graph = singular_instance(rng, condition)
            assert graph.is_simple()
            assert nx.is_connected(graph.underlying_graph)

    def test_unknown_condition(self, rng):
        """Test only conditions 1 to 4 exist."""
        with pytest.raises(DomainError, match="condition"):
            singular_instance(rng, 5)

    def test_seeded(self):
        """Test a seed fixes the family."""
        first = singular_instances(2, count=3, seed=7)
        second = singular_instances(2, count=3, seed=7)
        assert [g.edges for g in first] == [g.edges for g in second]
        assert len(first) == 3


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
