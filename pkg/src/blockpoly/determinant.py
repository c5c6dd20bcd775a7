"""Determinant and permanent as the λ = 0 specialization of the engines.

At λ = 0 every removal multiplier is −α_t(d_t − 1), so removal terms
vanish whenever the removed cut-vertices carry no loop. When no cut-vertex
has a loop, det(G) is simply the sum of det-summands over B-partitions.
"""

import logging

from blockpoly.blocks import decompose
from blockpoly.bpartition import enumerate_bpartitions
from blockpoly.constants import (
    DEFAULT_WORKERS,
    ENGINE_BLOCKGRAPH,
    ENGINE_ORACLE,
    ENGINE_SCHUR,
    ENGINE_THEOREM,
    MODE_INT,
)
from blockpoly.digraph import WeightedDigraph, matrix_of_digraph
from blockpoly.engines import EngineContext, TheoremEngine, get_engine
from blockpoly.errors import ConfigError, DomainError
from blockpoly.oracles import leibniz_det, leibniz_per
from blockpoly.types import Coefficient

logger = logging.getLogger(__name__)


def _scalar(graph: WeightedDigraph, engine: str, permanent: bool, workers: int) -> Coefficient:
    context = EngineContext(permanent=permanent, shifted=False, workers=workers)
    if engine == ENGINE_ORACLE:
        matrix = matrix_of_digraph(graph)
        return leibniz_per(matrix) if permanent else leibniz_det(matrix)
    return get_engine(engine).polynomial(graph, context).eval_at_zero()


def determinant(
    graph: WeightedDigraph, engine: str = ENGINE_THEOREM, workers: int = DEFAULT_WORKERS
) -> Coefficient:
    """det(A) through the chosen engine.

    Engines: theorem, recursive, oracle (Leibniz), blockgraph (simple block
    graphs only) and schur.
    """
    if engine == ENGINE_BLOCKGRAPH:
        from blockpoly.block_graph import det_block_graph

        return det_block_graph(graph)
    if engine == ENGINE_SCHUR:
        from blockpoly.schur import det_schur

        return det_schur(graph)
    return _scalar(graph, engine, permanent=False, workers=workers)


def permanent(
    graph: WeightedDigraph, engine: str = ENGINE_THEOREM, workers: int = DEFAULT_WORKERS
) -> Coefficient:
    """per(A) through the theorem, recursive or oracle engine."""
    if engine in (ENGINE_BLOCKGRAPH, ENGINE_SCHUR):
        raise ConfigError(f"Engine {engine!r} cannot compute permanents")
    return _scalar(graph, engine, permanent=True, workers=workers)


def has_looped_cut_vertex(graph: WeightedDigraph) -> bool:
    return any(graph.loop(v) != 0 for v in decompose(graph).cut_vertices)


def determinant_fast_path(graph: WeightedDigraph) -> Coefficient:
    """Sum of det-summands over all B-partitions of G.

    Raises:
        DomainError: some cut-vertex carries a loop, so removal terms survive
    """
    decomposition = decompose(graph)
    looped = [v for v in decomposition.cut_vertices if graph.loop(v) != 0]
    if looped:
        raise DomainError(f"Cut-vertices {looped} carry loops; removal terms do not vanish")

    context = EngineContext(permanent=False, shifted=False)
    partitions = enumerate_bpartitions(graph, decomposition)
    total: Coefficient = 0 if graph.mode == MODE_INT else 0j
    count = 0
    for summand in TheoremEngine().summands(partitions, graph, context):
        total += summand.eval_at_zero()
        count += 1
    logger.debug(f"Fast path summed {count} det-summand(s)")
    return total
