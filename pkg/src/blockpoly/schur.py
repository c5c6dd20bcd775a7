"""Determinants of cut-vertex-free digraphs by one-vertex Schur elimination.

Write A with the pivot v last, A = [[A1, b], [c, d]], A1 the matrix of G∖v.
Then

    A1 invertible:           det(A) = det(A1) · (d − c A1⁻¹ b)
    A1 singular, d ≠ 0:      det(A) = d · det(A1 − b d⁻¹ c)
    A1 singular, d = 0:      det(A) = det(A1 − b c)

and each level removes one vertex. Whenever the digraph reached has
cut-vertices the B-partition determinant takes over, so the pivot is chosen
to maximize b(G∖v), the number of blocks left behind.

Float (complex) digraphs use all three cases. Exact digraphs keep integer
entries: they apply the singular cases only when d is 0 or ±1 and hand every
other level to the B-partition determinant.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

import networkx as nx
import numpy as np
import numpy.typing as npt

from blockpoly.blocks import block_count, decompose
from blockpoly.constants import (
    CASE_A1_INVERTIBLE,
    CASE_A1_SINGULAR_D_NONZERO,
    CASE_A1_SINGULAR_D_ZERO,
    MODE_COMPLEX,
    MODE_INT,
    PIVOT_EXHAUSTIVE,
    PIVOT_MAX_DEGREE,
    PIVOT_RULES,
    SCHUR_EXHAUSTIVE_MAX_ORDER,
    SCHUR_SINGULAR_RTOL,
)
from blockpoly.digraph import (
    WeightedDigraph,
    digraph_of_graph,
    digraph_of_matrix,
    matrix_of_digraph,
)
from blockpoly.errors import ConfigError, DomainError
from blockpoly.types import Coefficient, VertexId

logger = logging.getLogger(__name__)

# A rule name, or a function returning the vertex to eliminate next
PivotRule = Union[str, Callable[[WeightedDigraph], VertexId]]


@dataclass
class EliminationStep:
    """One eliminated pivot and the order-(n−1) matrix handed to the next level."""

    pivot: VertexId
    case: str
    reduced: npt.NDArray[Any]
    labels: Tuple[VertexId, ...] = ()

    @property
    def order(self) -> int:
        return self.reduced.shape[0]

    def to_json(self) -> Dict[str, Any]:
        def entry(x: Any) -> Any:
            if isinstance(x, complex) or np.iscomplexobj(x):
                z = complex(x)
                return [z.real, z.imag]
            return int(x)

        return {
            "pivot": self.pivot,
            "case": self.case,
            "labels": list(self.labels),
            "reduced": [[entry(x) for x in row] for row in self.reduced],
        }


# Pivot selection


def _blocks_without(graph: WeightedDigraph, v: VertexId) -> int:
    return block_count(graph.without([v]))


def best_elimination_vertex(graph: WeightedDigraph) -> VertexId:
    """Vertex maximizing b(G∖v) over all v, smallest id on ties."""
    if graph.order < 2:
        raise DomainError("Pivot selection needs at least two vertices")
    return max(graph.vertices, key=lambda v: (_blocks_without(graph, v), -v))


def max_degree_vertex(graph: WeightedDigraph) -> VertexId:
    """Vertex of maximum degree; ties go to the larger b(G∖v), then the smallest id."""
    if graph.order < 2:
        raise DomainError("Pivot selection needs at least two vertices")
    top = max(graph.degree(v) for v in graph.vertices)
    tied = [v for v in graph.vertices if graph.degree(v) == top]
    if len(tied) == 1:
        return tied[0]
    return max(tied, key=lambda v: (_blocks_without(graph, v), -v))


def default_pivot_rule(order: int) -> str:
    return PIVOT_EXHAUSTIVE if order <= SCHUR_EXHAUSTIVE_MAX_ORDER else PIVOT_MAX_DEGREE


def choose_pivot(graph: WeightedDigraph, rule: Optional[PivotRule] = None) -> VertexId:
    if callable(rule):
        pivot = rule(graph)
        if pivot not in graph.vertex_set:
            raise DomainError(f"Pivot {pivot!r} is not a vertex of the digraph")
        return pivot
    rule = rule or default_pivot_rule(graph.order)
    if rule == PIVOT_EXHAUSTIVE:
        return best_elimination_vertex(graph)
    if rule == PIVOT_MAX_DEGREE:
        return max_degree_vertex(graph)
    raise ConfigError(f"Unknown pivot rule {rule!r}; choose one of {PIVOT_RULES}")


@dataclass
class HeuristicReport:
    """Max-degree pivot against the exhaustive block-maximizing pivot."""

    heuristic_vertex: VertexId
    heuristic_blocks: int
    best_vertex: VertexId
    best_blocks: int

    @property
    def agrees(self) -> bool:
        return self.heuristic_blocks == self.best_blocks

    def to_json(self) -> Dict[str, Any]:
        return {
            "heuristic": {"vertex": self.heuristic_vertex, "blocks": self.heuristic_blocks},
            "exhaustive": {"vertex": self.best_vertex, "blocks": self.best_blocks},
            "agrees": self.agrees,
        }


def degree_heuristic_report(graph: WeightedDigraph) -> HeuristicReport:
    heuristic = max_degree_vertex(graph)
    best = best_elimination_vertex(graph)
    return HeuristicReport(
        heuristic_vertex=heuristic,
        heuristic_blocks=_blocks_without(graph, heuristic),
        best_vertex=best,
        best_blocks=_blocks_without(graph, best),
    )


def search_heuristic_counterexamples(
    orders: Iterable[int] = (6, 7, 8), trials: int = 200, seed: int = 0
) -> List[WeightedDigraph]:
    """Random cut-vertex-free graphs on which the max-degree pivot loses blocks."""
    rng = np.random.default_rng(seed)
    found: List[WeightedDigraph] = []
    for n in orders:
        for _ in range(trials):
            p = float(rng.uniform(0.3, 0.7))
            candidate = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31)))
            if not nx.is_biconnected(candidate):
                continue
            graph = digraph_of_graph(candidate)
            report = degree_heuristic_report(graph)
            if not report.agrees:
                logger.info(
                    f"Order {n}: max-degree pivot {report.heuristic_vertex} leaves "
                    f"{report.heuristic_blocks} block(s), vertex {report.best_vertex} "
                    f"leaves {report.best_blocks}"
                )
                found.append(graph)
    return found


# Elimination


def _direct(matrix: npt.NDArray[Any], one: Coefficient) -> Coefficient:
    n = matrix.shape[0]
    if n == 0:
        return one
    if n == 1:
        return matrix[0, 0]
    return matrix[0, 0] * matrix[1, 1] - matrix[0, 1] * matrix[1, 0]


class _Elimination:
    def __init__(self, rule: Optional[PivotRule], exact: bool):
        self.rule = rule
        self.exact = exact
        self.steps: List[EliminationStep] = []

    def _handoff(self, graph: WeightedDigraph, reason: str) -> Coefficient:
        from blockpoly.determinant import determinant

        logger.debug(f"Order {graph.order}: {reason}; using the B-partition determinant")
        return determinant(graph)

    def _is_singular(self, a1: npt.NDArray[Any]) -> bool:
        size = a1.shape[0]
        norm = float(np.abs(a1).sum(axis=1).max())
        return abs(np.linalg.det(a1)) <= SCHUR_SINGULAR_RTOL * norm**size

    def run(self, graph: WeightedDigraph) -> Coefficient:
        one: Coefficient = 1 if self.exact else 1 + 0j
        matrix = matrix_of_digraph(graph)
        if graph.order <= 2:
            return _direct(matrix, one)
        if decompose(graph).cut_vertices:
            return self._handoff(graph, "cut-vertices present")

        pivot = choose_pivot(graph, self.rule)
        k = graph.vertices.index(pivot)
        rest = [i for i in range(graph.order) if i != k]
        labels = tuple(graph.vertices[i] for i in rest)
        a1 = matrix[np.ix_(rest, rest)]
        b = matrix[rest, k]
        c = matrix[k, rest]
        d = matrix[k, k]

        if self.exact:
            return self._exact_step(graph, pivot, labels, a1, b, c, d)
        return self._float_step(pivot, labels, a1, b, c, d)

    def _record(
        self, pivot: VertexId, case: str, reduced: npt.NDArray[Any], labels: Tuple[VertexId, ...]
    ) -> WeightedDigraph:
        self.steps.append(EliminationStep(pivot=pivot, case=case, reduced=reduced, labels=labels))
        logger.debug(f"Eliminated {pivot} ({case}), order {len(labels)} remains")
        mode = MODE_INT if self.exact else MODE_COMPLEX
        return digraph_of_matrix(reduced, mode=mode, labels=labels)

    def _float_step(
        self,
        pivot: VertexId,
        labels: Tuple[VertexId, ...],
        a1: npt.NDArray[Any],
        b: npt.NDArray[Any],
        c: npt.NDArray[Any],
        d: complex,
    ) -> Coefficient:
        if not self._is_singular(a1):
            schur = d - c @ np.linalg.solve(a1, b)
            reduced = self._record(pivot, CASE_A1_INVERTIBLE, a1, labels)
            return schur * self.run(reduced)

        scale = max(float(np.abs(a1).max(initial=0.0)), 1.0)
        if abs(d) > SCHUR_SINGULAR_RTOL * scale:
            reduced = self._record(
                pivot, CASE_A1_SINGULAR_D_NONZERO, a1 - np.multiply.outer(b, c) / d, labels
            )
            return d * self.run(reduced)

        reduced = self._record(pivot, CASE_A1_SINGULAR_D_ZERO, a1 - np.multiply.outer(b, c), labels)
        return self.run(reduced)

    def _exact_step(
        self,
        graph: WeightedDigraph,
        pivot: VertexId,
        labels: Tuple[VertexId, ...],
        a1: npt.NDArray[Any],
        b: npt.NDArray[Any],
        c: npt.NDArray[Any],
        d: int,
    ) -> Coefficient:
        from blockpoly.determinant import determinant

        if d not in (0, 1, -1):
            return self._handoff(graph, f"pivot entry {d} would leave integers")
        if determinant(graph.without([pivot])) != 0:
            return self._handoff(graph, "A1 invertible")

        if d == 0:
            reduced = self._record(
                pivot, CASE_A1_SINGULAR_D_ZERO, a1 - np.multiply.outer(b, c), labels
            )
            return self.run(reduced)

        # 1/d = d for d = ±1
        reduced = self._record(
            pivot, CASE_A1_SINGULAR_D_NONZERO, a1 - np.multiply.outer(b, c) * d, labels
        )
        return d * self.run(reduced)


def schur_trace(
    graph: WeightedDigraph, pivot: Optional[PivotRule] = None
) -> Tuple[Coefficient, List[EliminationStep]]:
    """det(A) by Schur elimination, with the chain of elimination steps.

    Args:
        graph: Digraph of A
        pivot: "exhaustive", "max-degree" or a function picking the pivot of
            each level; by default exhaustive up to order
            SCHUR_EXHAUSTIVE_MAX_ORDER, max-degree above

    Returns:
        The determinant and the steps in elimination order
    """
    if isinstance(pivot, str) and pivot not in PIVOT_RULES:
        raise ConfigError(f"Unknown pivot rule {pivot!r}; choose one of {PIVOT_RULES}")
    elimination = _Elimination(pivot, exact=graph.mode == MODE_INT)
    value = elimination.run(graph)
    value = int(value) if elimination.exact else complex(value)
    return value, elimination.steps


def det_schur(graph: WeightedDigraph, pivot: Optional[PivotRule] = None) -> Coefficient:
    """det(A) by Schur elimination."""
    value, _ = schur_trace(graph, pivot)
    return value
