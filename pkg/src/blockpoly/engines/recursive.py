"""Pendant-block recurrence and the closed forms built on it.

For a vertex v and an induced subdigraph H ∋ v such that H∖v is a union of
components of G∖v:

    φ(G) = φ(H)φ(G∖H) + φ(H∖v)φ(G∖(H∖v)) + (λ − α)φ(H∖v)φ(G∖H)

with α the loop weight at v. Taking H to be a pendant block peels one block
per step until only cut-vertex-free pieces remain. The identity holds
verbatim for ψ.
"""

import logging
from typing import Dict, Iterable, Optional

from blockpoly.blocks import decompose, pendant_blocks
from blockpoly.constants import ENGINE_RECURSIVE
from blockpoly.digraph import WeightedDigraph, components
from blockpoly.engines.base import EngineContext
from blockpoly.engines.expansion import ShiftedDigraph, expand
from blockpoly.errors import DomainError
from blockpoly.polynomial import Polynomial, poly_product, poly_scale
from blockpoly.types import VertexId, VertexSet

logger = logging.getLogger(__name__)


class _Recursion:
    """Memoized recurrence over vertex subsets of one shifted digraph."""

    def __init__(self, shifted: ShiftedDigraph, permanent: bool):
        self.shifted = shifted
        self.permanent = permanent
        self.cache: Dict[VertexSet, Polynomial] = {}

    def value(self, subset: Iterable[VertexId]) -> Polynomial:
        key = frozenset(subset)
        if not key:
            return Polynomial.one(self.shifted.mode)
        cached = self.cache.get(key)
        if cached is not None:
            return cached

        piece = self.shifted.induced(key)
        pieces = components(piece.graph)
        if len(pieces) > 1:
            result = poly_product((self.value(p.vertex_set) for p in pieces), piece.mode)
        else:
            decomposition = decompose(piece.graph)
            if not decomposition.cut_vertices:
                result = expand(piece, self.permanent)
            else:
                index = pendant_blocks(decomposition)[0]
                (v,) = decomposition.incidence[index]
                result = self.split(key, decomposition.blocks[index], v)

        self.cache[key] = result
        return result

    def split(self, vertices: VertexSet, hanging: VertexSet, v: VertexId) -> Polynomial:
        """Recurrence at v with H = hanging."""
        rest = vertices - hanging
        hanging_minus_v = hanging - {v}
        rest_with_v = vertices - hanging_minus_v
        reduced = self.value(hanging_minus_v)
        return (
            self.value(hanging) * self.value(rest)
            + reduced * self.value(rest_with_v)
            + self.shifted.vertex_multiplier(v) * reduced * self.value(rest)
        )


class RecursiveEngine:
    """φ/ψ through repeated pendant-block recurrence."""

    name = ENGINE_RECURSIVE

    def __init__(self, log_level: str = "WARNING"):
        """Initialize engine."""
        self.logger = logging.getLogger(__name__)
        self.logger.setLevel(log_level)

    def polynomial(
        self, graph: WeightedDigraph, context: Optional[EngineContext] = None
    ) -> Polynomial:
        context = context or EngineContext()
        recursion = _Recursion(ShiftedDigraph(graph, context.shifted), context.permanent)
        result = recursion.value(graph.vertex_set)
        self.logger.debug(f"Recurrence evaluated {len(recursion.cache)} distinct subset(s)")
        return result


def charpoly_recursive(graph: WeightedDigraph) -> Polynomial:
    """φ(G) by pendant-block recurrence."""
    return RecursiveEngine().polynomial(graph, EngineContext(permanent=False))


def permpoly_recursive(graph: WeightedDigraph) -> Polynomial:
    """ψ(G) by pendant-block recurrence."""
    return RecursiveEngine().polynomial(graph, EngineContext(permanent=True))


def subdigraph_recurrence(
    graph: WeightedDigraph,
    hanging: Iterable[VertexId],
    v: VertexId,
    permanent: bool = False,
) -> Polynomial:
    """φ(G) (or ψ(G)) split at cut-vertex v along the subdigraph H = hanging.

    Raises:
        DomainError: v is not a cut-vertex, v is not in H, or H∖v is not a
            union of whole components of G∖v
    """
    vertices = graph.vertex_set
    hanging_set = frozenset(hanging)
    if v not in decompose(graph).cut_vertices:
        raise DomainError(f"Vertex {v} is not a cut-vertex")
    if v not in hanging_set or not hanging_set <= vertices:
        raise DomainError(f"Subdigraph must contain {v} and lie inside the digraph")

    hanging_minus_v = hanging_set - {v}
    for component in components(graph.without([v])):
        inside = component.vertex_set & hanging_minus_v
        if inside and inside != component.vertex_set:
            raise DomainError(
                f"H∖v cuts component {sorted(component.vertex_set)} of G∖v; "
                "it must be a union of whole components"
            )

    recursion = _Recursion(ShiftedDigraph(graph), permanent)
    return recursion.split(vertices, hanging_set, v)


def single_cut_closed_form(
    graph: WeightedDigraph, v: Optional[VertexId] = None, permanent: bool = False
) -> Polynomial:
    """Closed form for a digraph with exactly one cut-vertex v of cut-index k.

        Σ_i φ(B_i) ∏_{j≠i} φ(B_j∖v) + (k − 1)(λ − α) ∏_i φ(B_i∖v)

    over the blocks B_i at v; components not touching v multiply in.
    """
    decomposition = decompose(graph)
    if len(decomposition.cut_vertices) != 1:
        raise DomainError(
            f"Expected exactly one cut-vertex, found {len(decomposition.cut_vertices)}"
        )
    (cut,) = decomposition.cut_vertices
    if v is not None and v != cut:
        raise DomainError(f"Vertex {v} is not the cut-vertex (found {cut})")

    recursion = _Recursion(ShiftedDigraph(graph), permanent)
    mode = graph.mode
    blocks = [decomposition.blocks[i] for i in decomposition.blocks_containing(cut)]
    reduced = [recursion.value(block - {cut}) for block in blocks]
    elsewhere = graph.vertex_set - frozenset().union(*blocks)

    total = Polynomial.zero(mode)
    for i, block in enumerate(blocks):
        others = poly_product((r for j, r in enumerate(reduced) if j != i), mode)
        total = total + recursion.value(block) * others
    multiplier = poly_scale(recursion.shifted.vertex_multiplier(cut), len(blocks) - 1)
    total = total + multiplier * poly_product(reduced, mode)
    return total * recursion.value(elsewhere)


def charpoly_single_cut(graph: WeightedDigraph, v: Optional[VertexId] = None) -> Polynomial:
    """φ(G) for a digraph with a single cut-vertex."""
    return single_cut_closed_form(graph, v, permanent=False)


def permpoly_single_cut(graph: WeightedDigraph, v: Optional[VertexId] = None) -> Polynomial:
    """ψ(G) for a digraph with a single cut-vertex."""
    return single_cut_closed_form(graph, v, permanent=True)
