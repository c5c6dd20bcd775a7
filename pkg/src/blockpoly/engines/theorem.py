"""Cut-vertex removal sum over B-partitions.

For a digraph with cut-vertices C, φ(G) is the sum over every subset Q of C
of the multiplier ∏_{t∈Q} (λ − α_t)(d_t − 1) times the sum of φ-summands over
the B-partitions of G∖Q. Loop weights α_t and cut-indices d_t come from the
original digraph, and the B-partitions of G∖Q range over the original blocks
with Q deleted. The same sum with per-summands gives ψ(G).

φ of a part is memoized by vertex set. Parts that are small or free of
cut-vertices are expanded directly; larger parts recurse into the sum.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from blockpoly.blocks import BlockDecomposition, decompose
from blockpoly.bpartition import BPartition, enumerate_bpartitions, partition_summand
from blockpoly.constants import ENGINE_THEOREM, LEIBNIZ_BASE_MAX_ORDER
from blockpoly.digraph import WeightedDigraph, components
from blockpoly.engines.base import EngineContext
from blockpoly.engines.expansion import ShiftedDigraph, expand
from blockpoly.polynomial import Polynomial, poly_mul, poly_product, poly_sum
from blockpoly.types import VertexId, VertexSet

logger = logging.getLogger(__name__)


@dataclass
class TheoremTerm:
    """One removed-subset term: multiplier × summand total over G∖Q."""

    removed: Tuple[VertexId, ...]
    multiplier: Polynomial
    residual: WeightedDigraph
    summand_total: Polynomial
    partition_count: int = 0

    @property
    def q(self) -> int:
        return len(self.removed)

    @property
    def value(self) -> Polynomial:
        return poly_mul(self.multiplier, self.summand_total)

    def to_json(self) -> Dict[str, Any]:
        return {
            "removed": list(self.removed),
            "q": self.q,
            "multiplier": self.multiplier.to_json(),
            "residual": list(self.residual.vertices),
            "partition_count": self.partition_count,
            "summand_total": self.summand_total.to_json(),
        }


class _Evaluation:
    """Memoized φ/ψ of vertex subsets of one shifted digraph."""

    def __init__(self, shifted: ShiftedDigraph, permanent: bool):
        self.shifted = shifted
        self.permanent = permanent
        self.cache: Dict[VertexSet, Polynomial] = {}

    def value(self, subset: VertexSet) -> Polynomial:
        if not subset:
            return Polynomial.one(self.shifted.mode)
        key = frozenset(subset)
        cached = self.cache.get(key)
        if cached is not None:
            return cached

        piece = self.shifted.induced(key)
        pieces = components(piece.graph)
        if len(pieces) > 1:
            result = poly_product((self.value(p.vertex_set) for p in pieces), piece.mode)
        elif piece.order <= LEIBNIZ_BASE_MAX_ORDER:
            result = expand(piece, self.permanent)
        else:
            decomposition = decompose(piece.graph)
            if decomposition.cut_vertices:
                result = poly_sum(
                    (t.value for t in self.terms(piece.graph, decomposition, skip_vanishing=True)),
                    piece.mode,
                )
            else:
                result = expand(piece, self.permanent)

        self.cache[key] = result
        return result

    def summand(self, partition: BPartition) -> Polynomial:
        return partition_summand(partition, self.value, self.shifted.mode)

    def term(
        self,
        graph: WeightedDigraph,
        decomposition: BlockDecomposition,
        removed: Tuple[VertexId, ...],
        skip_vanishing: bool,
    ) -> Optional[TheoremTerm]:
        multiplier = poly_product(
            (self.shifted.removal_multiplier(t, decomposition.cut_index[t]) for t in removed),
            self.shifted.mode,
        )
        if skip_vanishing and multiplier.is_zero:
            return None

        residual = graph.without(removed)
        total = Polynomial.zero(self.shifted.mode)
        count = 0
        for partition in enumerate_bpartitions(residual, decomposition.restrict(removed)):
            total = total + self.summand(partition)
            count += 1
        logger.debug(f"Removed {list(removed)}: {count} B-partition(s)")
        return TheoremTerm(
            removed=removed,
            multiplier=multiplier,
            residual=residual,
            summand_total=total,
            partition_count=count,
        )

    def terms(
        self,
        graph: WeightedDigraph,
        decomposition: BlockDecomposition,
        skip_vanishing: bool = False,
        workers: int = 1,
    ) -> List[TheoremTerm]:
        """All removal terms in order of q, then lexicographic removed set."""
        cut_vertices = decomposition.cut_vertices
        subsets = [
            removed
            for q in range(len(cut_vertices) + 1)
            for removed in itertools.combinations(cut_vertices, q)
        ]

        def build(removed: Tuple[VertexId, ...]) -> Optional[TheoremTerm]:
            return self.term(graph, decomposition, removed, skip_vanishing)

        if workers > 1 and len(subsets) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                built = list(pool.map(build, subsets))
        else:
            built = [build(removed) for removed in subsets]
        return [term for term in built if term is not None]


class TheoremEngine:
    """φ/ψ through the cut-vertex removal sum."""

    name = ENGINE_THEOREM

    def __init__(self, log_level: str = "WARNING"):
        """Initialize engine."""
        self.logger = logging.getLogger(__name__)
        self.logger.setLevel(log_level)

    def _evaluation(self, graph: WeightedDigraph, context: EngineContext) -> _Evaluation:
        return _Evaluation(ShiftedDigraph(graph, context.shifted), context.permanent)

    def polynomial(
        self, graph: WeightedDigraph, context: Optional[EngineContext] = None
    ) -> Polynomial:
        """Product over components of each component's removal sum."""
        context = context or EngineContext()
        evaluation = self._evaluation(graph, context)
        factors = []
        for component in components(graph):
            decomposition = decompose(component)
            if not decomposition.cut_vertices:
                factors.append(evaluation.value(component.vertex_set))
                continue
            terms = evaluation.terms(
                component, decomposition, skip_vanishing=True, workers=context.workers
            )
            self.logger.debug(
                f"Component {list(component.vertices)}: {len(terms)} non-vanishing term(s)"
            )
            factors.append(poly_sum((t.value for t in terms), graph.mode))
        return poly_product(factors, graph.mode)

    def terms(
        self, graph: WeightedDigraph, context: Optional[EngineContext] = None
    ) -> List[TheoremTerm]:
        """Every removal term of the whole digraph, vanishing ones included."""
        context = context or EngineContext()
        evaluation = self._evaluation(graph, context)
        return evaluation.terms(graph, decompose(graph), workers=context.workers)

    def summand(
        self,
        partition: BPartition,
        graph: WeightedDigraph,
        context: Optional[EngineContext] = None,
    ) -> Polynomial:
        """Product of φ (or ψ) over the parts of one B-partition of graph."""
        context = context or EngineContext()
        return self._evaluation(graph, context).summand(partition)

    def summands(
        self,
        partitions: Iterable[BPartition],
        graph: WeightedDigraph,
        context: Optional[EngineContext] = None,
    ) -> Iterator[Polynomial]:
        """Summands of many B-partitions sharing one part cache."""
        context = context or EngineContext()
        evaluation = self._evaluation(graph, context)
        for partition in partitions:
            yield evaluation.summand(partition)


def charpoly_theorem(graph: WeightedDigraph, workers: int = 1) -> Polynomial:
    """φ(G) = det(A − λI) by the cut-vertex removal sum."""
    return TheoremEngine().polynomial(graph, EngineContext(permanent=False, workers=workers))


def permpoly_theorem(graph: WeightedDigraph, workers: int = 1) -> Polynomial:
    """ψ(G) = per(A − λI) by the cut-vertex removal sum."""
    return TheoremEngine().polynomial(graph, EngineContext(permanent=True, workers=workers))


def theorem_terms(graph: WeightedDigraph, permanent: bool = False) -> List[TheoremTerm]:
    """Removal-sum breakdown of φ(G) (or ψ(G)), one term per removed subset."""
    return TheoremEngine().terms(graph, EngineContext(permanent=permanent))
