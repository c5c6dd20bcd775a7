"""Tests for Schur elimination and pivot selection."""

import json

import networkx as nx
import numpy as np
import pytest

from blockpoly.constants import (
    CASE_A1_INVERTIBLE,
    CASE_A1_SINGULAR_D_NONZERO,
    CASE_A1_SINGULAR_D_ZERO,
)
from blockpoly.digraph import WeightedDigraph, digraph_of_graph, digraph_of_matrix
from blockpoly.errors import ConfigError, DomainError
from blockpoly.generators import complete_graph, cycle_graph, staircase_matrix
from blockpoly.oracles import leibniz_det
from blockpoly.schur import (
    best_elimination_vertex,
    choose_pivot,
    default_pivot_rule,
    degree_heuristic_report,
    det_schur,
    max_degree_vertex,
    schur_trace,
    search_heuristic_counterexamples,
)
from tests.conftest import DET_M1, HEURISTIC_COUNTEREXAMPLE_EDGES


@pytest.fixture
def counterexample() -> WeightedDigraph:
    return digraph_of_graph(nx.Graph(HEURISTIC_COUNTEREXAMPLE_EDGES))


class TestPivotSelection:
    """Test pivot rules."""

    def test_counterexample_fixture(self, counterexample, fixtures_dir):
        """Test the committed fixture describes the same graph."""
        data = json.loads((fixtures_dir / "heuristic_counterexample.json").read_text())
        assert [tuple(e) for e in data["edges"]] == HEURISTIC_COUNTEREXAMPLE_EDGES
        assert counterexample.order == data["order"]

    def test_max_degree_misses_best_vertex(self, counterexample):
        """Test the hub has top degree but removing it leaves one block."""
        assert max_degree_vertex(counterexample) == 6
        assert best_elimination_vertex(counterexample) == 1

        report = degree_heuristic_report(counterexample)
        assert report.heuristic_blocks == 1
        assert report.best_blocks == 2
        assert not report.agrees
        assert report.to_json() == {
            "heuristic": {"vertex": 6, "blocks": 1},
            "exhaustive": {"vertex": 1, "blocks": 2},
            "agrees": False,
        }

    def test_ties_prefer_more_blocks(self):
        """Test degree ties are broken by b(G∖v)."""
        # K_{2,3} on {3, 4} x {1, 2, 5} plus the edge 1-2; all but v5 have degree 3
        edges = [(3, 1), (3, 2), (3, 5), (4, 1), (4, 2), (4, 5), (1, 2)]
        graph = digraph_of_graph(nx.Graph(edges))
        assert max_degree_vertex(graph) == 3
        assert best_elimination_vertex(graph) == 3

    def test_symmetric_graph_picks_smallest_id(self):
        """Test complete graphs pivot on vertex 1."""
        assert best_elimination_vertex(complete_graph(5)) == 1
        assert max_degree_vertex(cycle_graph(6)) == 1

    def test_order_too_small(self):
        """Test a single vertex has no pivot."""
        single = WeightedDigraph((1,), {})
        with pytest.raises(DomainError):
            best_elimination_vertex(single)
        with pytest.raises(DomainError):
            max_degree_vertex(single)

    def test_default_rule(self):
        """Test exhaustive up to order 12, max-degree above."""
        assert default_pivot_rule(12) == "exhaustive"
        assert default_pivot_rule(13) == "max-degree"

    def test_unknown_rule(self, counterexample):
        """Test an unknown rule name is rejected."""
        with pytest.raises(ConfigError, match="pivot rule"):
            choose_pivot(counterexample, "random")
        with pytest.raises(ConfigError):
            schur_trace(counterexample, "random")

    def test_callable_rule(self, counterexample):
        """Test a function can choose the pivot, but only among the vertices."""
        assert choose_pivot(counterexample, lambda g: max(g.vertices)) == 6
        with pytest.raises(DomainError, match="not a vertex"):
            choose_pivot(counterexample, lambda g: 99)

    def test_search_finds_counterexamples(self):
        """Test the random search returns only disagreeing graphs."""
        found = search_heuristic_counterexamples(orders=(6, 7), trials=60, seed=1)
        for graph in found:
            assert not degree_heuristic_report(graph).agrees


class TestElimination:
    """Test the three elimination cases and the hand-off."""

    def test_cut_vertices_hand_off(self, m1):
        """Test a digraph with cut-vertices goes straight to the B-partition determinant."""
        value, steps = schur_trace(m1)
        assert value == DET_M1
        assert steps == []

    def test_small_orders(self):
        """Test orders 0, 1 and 2 are computed directly."""
        assert det_schur(WeightedDigraph()) == 1
        assert det_schur(digraph_of_matrix([[7]])) == 7
        assert det_schur(digraph_of_matrix([[1, 2], [3, 4]])) == -2

    def test_exact_singular_minor_zero_pivot(self):
        """Test A1 singular and d = 0 in exact mode."""
        matrix = [[0, 1, 2], [3, 1, 1], [1, 1, 1]]
        value, steps = schur_trace(digraph_of_matrix(matrix))
        assert value == 2
        assert [s.case for s in steps] == [CASE_A1_SINGULAR_D_ZERO]
        assert steps[0].pivot == 1
        assert steps[0].labels == (2, 3)
        assert steps[0].reduced.tolist() == [[-2, -5], [0, -1]]

    def test_exact_singular_minor_unit_pivot(self):
        """Test A1 singular and d = 1 in exact mode."""
        matrix = [[1, 1, 2], [3, 1, 1], [1, 1, 1]]
        value, steps = schur_trace(digraph_of_matrix(matrix))
        assert value == leibniz_det(matrix) == 2
        assert [s.case for s in steps] == [CASE_A1_SINGULAR_D_NONZERO]

    def test_exact_large_pivot_hands_off(self):
        """Test d outside {0, ±1} keeps exact arithmetic by handing off."""
        matrix = [[5, 1, 2], [3, 1, 1], [1, 1, 1]]
        value, steps = schur_trace(digraph_of_matrix(matrix))
        assert value == leibniz_det(matrix)
        assert steps == []

    def test_float_invertible_minor(self):
        """Test K4 in float mode eliminates through invertible minors."""
        matrix = np.ones((4, 4)) - np.eye(4)
        value, steps = schur_trace(digraph_of_matrix(matrix, mode="complex"))
        assert value == pytest.approx(-3)
        assert [s.case for s in steps] == [CASE_A1_INVERTIBLE, CASE_A1_INVERTIBLE]
        assert [s.order for s in steps] == [3, 2]

    @pytest.mark.parametrize(
        "matrix,case",
        [
            ([[0, 1, 2], [3, 1, 1], [1, 1, 1]], CASE_A1_SINGULAR_D_ZERO),
            ([[2, 1, 2], [3, 1, 1], [1, 1, 1]], CASE_A1_SINGULAR_D_NONZERO),
        ],
    )
    def test_float_singular_minor(self, matrix, case):
        """Test the singular-minor cases in float mode."""
        graph = digraph_of_matrix(np.array(matrix, dtype=complex), mode="complex")
        value, steps = schur_trace(graph)
        assert value == pytest.approx(complex(leibniz_det(matrix)))
        assert steps[0].case == case

    def test_counterexample_value(self, counterexample):
        """Test the determinant of the order-6 graph."""
        graph = nx.Graph(HEURISTIC_COUNTEREXAMPLE_EDGES)
        matrix = nx.to_numpy_array(graph, nodelist=list(range(1, 7)))
        expected = leibniz_det(matrix.astype(int).tolist())
        for pivot in ("exhaustive", "max-degree"):
            assert det_schur(counterexample, pivot) == expected

    @pytest.mark.parametrize("seed", range(5))
    def test_zero_pivot_identity(self, seed):
        """Test det[[A1, b], [c, 0]] = det(A1 − bc) exactly when A1 is singular."""
        rng = np.random.default_rng(seed)
        a1 = rng.integers(-4, 5, size=(4, 4))
        a1[3] = a1[0] - 2 * a1[1]
        b, c = rng.integers(-4, 5, size=4), rng.integers(-4, 5, size=4)

        def bordered(inner):
            full = np.zeros((5, 5), dtype=int)
            full[:4, :4] = inner
            full[:4, 4] = b
            full[4, :4] = c
            return full.tolist()

        assert leibniz_det(a1.tolist()) == 0
        reduced = (a1 - np.outer(b, c)).tolist()
        assert leibniz_det(bordered(a1)) == leibniz_det(reduced)

        invertible = np.array([[2, 1, 0, 0], [0, 2, 1, 0], [0, 0, 2, 1], [7, 0, 0, 1]])
        shifted = (invertible - np.outer(b, c)).tolist()
        det_a1 = leibniz_det(invertible.tolist())
        assert det_a1 != 0
        assert leibniz_det(bordered(invertible)) == leibniz_det(shifted) - det_a1

    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_exact_elimination_to_order_two(self, n):
        """Test exact elimination in label order runs through every level."""
        matrix = staircase_matrix(np.random.default_rng(n), n)
        value, steps = schur_trace(digraph_of_matrix(matrix), lambda g: min(g.vertices))
        assert value == leibniz_det(matrix) != 0
        assert [s.pivot for s in steps] == list(range(1, n - 1))
        assert {s.case for s in steps} <= {CASE_A1_SINGULAR_D_ZERO, CASE_A1_SINGULAR_D_NONZERO}

    def test_any_pivot_order(self):
        """Test every pivot order gives the same determinant."""
        rng = np.random.default_rng(12)
        matrix = staircase_matrix(rng, 5)
        exact = digraph_of_matrix(matrix)
        floats = digraph_of_matrix(np.array(matrix, dtype=complex), mode="complex")
        expected = leibniz_det(matrix)

        def pick(g):
            return int(rng.choice(g.vertices))

        for _ in range(10):
            assert det_schur(exact, pick) == expected
            assert det_schur(floats, pick) == pytest.approx(complex(expected))

    def test_step_json(self):
        """Test elimination steps serialize their reduced matrix."""
        _, steps = schur_trace(digraph_of_matrix([[0, 1, 2], [3, 1, 1], [1, 1, 1]]))
        assert steps[0].to_json() == {
            "pivot": 1,
            "case": CASE_A1_SINGULAR_D_ZERO,
            "labels": [2, 3],
            "reduced": [[-2, -5], [0, -1]],
        }


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
