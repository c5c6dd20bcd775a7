"""Leibniz expansion of the whole matrix, exposed as an engine."""

from typing import Optional

from blockpoly.constants import ENGINE_ORACLE, LEIBNIZ_ORACLE_MAX_ORDER
from blockpoly.digraph import WeightedDigraph
from blockpoly.engines.base import EngineContext
from blockpoly.engines.expansion import ShiftedDigraph
from blockpoly.errors import SizeError
from blockpoly.oracles import leibniz_expand
from blockpoly.polynomial import Polynomial


class OracleEngine:
    """Sum over all permutations, no block structure used."""

    name = ENGINE_ORACLE

    def polynomial(
        self, graph: WeightedDigraph, context: Optional[EngineContext] = None
    ) -> Polynomial:
        context = context or EngineContext()
        if graph.order > LEIBNIZ_ORACLE_MAX_ORDER:
            raise SizeError(
                f"Leibniz expansion is capped at order {LEIBNIZ_ORACLE_MAX_ORDER}, "
                f"got order {graph.order}"
            )
        shifted = ShiftedDigraph(graph, context.shifted)
        one, zero = Polynomial.one(graph.mode), Polynomial.zero(graph.mode)
        return leibniz_expand(shifted.sparse_rows(), context.permanent, one, zero)
