"""B-partitions: one incident block chosen for every cut-vertex.

Choosing a block for each cut-vertex splits the vertex set into one part per
block (the block minus the cut-vertices sent elsewhere). The parts are
vertex-disjoint induced subdigraphs covering V(G), and there are exactly
∏ d_i such choices, d_i the cut-indices.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, Tuple

from blockpoly.blocks import BlockDecomposition
from blockpoly.digraph import WeightedDigraph
from blockpoly.errors import DomainError
from blockpoly.polynomial import Polynomial, poly_product
from blockpoly.types import Coefficient, CoefficientMode, VertexId, VertexSet


@dataclass(frozen=True)
class BPartition:
    """Cut-vertex assignment and the parts it induces, one part per block."""

    assignment: Dict[VertexId, int]
    parts: Tuple[VertexSet, ...]

    @property
    def nonempty_parts(self) -> Tuple[VertexSet, ...]:
        return tuple(part for part in self.parts if part)

    def to_json(self) -> Dict[str, object]:
        return {
            "assignment": {str(v): block for v, block in self.assignment.items()},
            "parts": [sorted(part) for part in self.parts],
        }


def enumerate_bpartitions(
    graph: WeightedDigraph, decomposition: BlockDecomposition
) -> Iterator[BPartition]:
    """Stream every B-partition in lexicographic order of block choices.

    Cut-vertices are visited in id order and each one ranges over its
    incident blocks in block order. ``decomposition`` may be a restricted
    decomposition (cut-vertices removed) as long as it covers V(graph).
    """
    if decomposition.vertices != graph.vertex_set:
        raise DomainError("Block decomposition does not cover the digraph's vertex set")

    cut_vertices = decomposition.cut_vertices
    choices = [decomposition.blocks_containing(v) for v in cut_vertices]

    for combo in itertools.product(*choices):
        assignment = dict(zip(cut_vertices, combo))
        parts = tuple(
            block - frozenset(v for v in decomposition.incidence[i] if assignment[v] != i)
            for i, block in enumerate(decomposition.blocks)
        )
        yield BPartition(assignment=assignment, parts=parts)


def count_bpartitions(decomposition: BlockDecomposition) -> int:
    """∏ d_i over cut-vertices, without enumerating."""
    return math.prod(decomposition.cut_index[v] for v in decomposition.cut_vertices)


def partition_summand(
    partition: BPartition,
    evaluate: Callable[[VertexSet], Polynomial],
    mode: CoefficientMode,
) -> Polynomial:
    """Product of evaluate(part) over parts; empty parts are the unit factor."""
    return poly_product((evaluate(part) for part in partition.nonempty_parts), mode)


def _summand(
    partition: BPartition, graph: WeightedDigraph, permanent: bool, shifted: bool
) -> Polynomial:
    from blockpoly.engines.base import EngineContext
    from blockpoly.engines.theorem import TheoremEngine

    context = EngineContext(permanent=permanent, shifted=shifted)
    return TheoremEngine().summand(partition, graph, context)


def phi_summand(partition: BPartition, graph: WeightedDigraph) -> Polynomial:
    """∏ φ(part)."""
    return _summand(partition, graph, permanent=False, shifted=True)


def psi_summand(partition: BPartition, graph: WeightedDigraph) -> Polynomial:
    """∏ ψ(part)."""
    return _summand(partition, graph, permanent=True, shifted=True)


def det_summand(partition: BPartition, graph: WeightedDigraph) -> Coefficient:
    """∏ det(part), the λ = 0 specialization of the φ-summand."""
    return _summand(partition, graph, permanent=False, shifted=False).eval_at_zero()


def per_summand(partition: BPartition, graph: WeightedDigraph) -> Coefficient:
    """∏ per(part)."""
    return _summand(partition, graph, permanent=True, shifted=False).eval_at_zero()
