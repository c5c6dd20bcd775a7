"""Randomized agreement of the polynomial engines with the Leibniz oracle."""

import numpy as np
import pytest

from blockpoly.blocks import decompose
from blockpoly.digraph import matrix_of_digraph
from blockpoly.engines import (
    charpoly_recursive,
    charpoly_single_cut,
    charpoly_theorem,
    permpoly_recursive,
    permpoly_single_cut,
    permpoly_theorem,
)
from blockpoly.generators import planted_cut_digraph, random_planted_instance
from blockpoly.oracles import leibniz_charpoly, leibniz_permpoly


@pytest.fixture(scope="module")
def planted():
    rng = np.random.default_rng(7)
    return [random_planted_instance(rng, max_order=8, max_cuts=3) for _ in range(200)]


@pytest.mark.slow
class TestPlantedSweep:
    """Test 200 planted digraphs of order at most 8."""

    def test_charpoly(self, planted):
        """Test φ from both engines equals the permutation sum."""
        for graph in planted:
            expected = leibniz_charpoly(matrix_of_digraph(graph))
            assert charpoly_theorem(graph) == expected, graph
            assert charpoly_recursive(graph) == expected, graph

    def test_permpoly(self, planted):
        """Test ψ from both engines equals the permutation sum."""
        for graph in planted:
            expected = leibniz_permpoly(matrix_of_digraph(graph))
            assert permpoly_theorem(graph) == expected, graph
            assert permpoly_recursive(graph) == expected, graph

    def test_workers(self, planted):
        """Test the threaded removal sum gives the same polynomial."""
        for graph in planted[:40]:
            assert charpoly_theorem(graph, workers=3) == charpoly_theorem(graph)


class TestSingleCut:
    """Test the closed form on digraphs with exactly one cut-vertex."""

    @pytest.mark.parametrize("seed", range(10))
    def test_against_oracle(self, seed):
        """Test three blocks glued at one vertex."""
        rng = np.random.default_rng(seed)
        while True:
            graph = planted_cut_digraph(rng, [int(rng.integers(2, 4)) for _ in range(3)])
            if len(decompose(graph).cut_vertices) == 1:
                break
        matrix = matrix_of_digraph(graph)
        assert charpoly_single_cut(graph) == leibniz_charpoly(matrix)
        assert permpoly_single_cut(graph) == leibniz_permpoly(matrix)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
