"""λ-shifted digraphs and the base expander for cut-vertex-free pieces.

The shift replaces every loop weight α by the polynomial α − λ (a missing
loop becomes −λ), turning a digraph of A into one of A − λI. It is applied
once per engine call; every recursive step works on induced pieces of the
same shifted digraph. With ``shifted=False`` the entries stay constant and
every engine computes det/per directly instead of φ/ψ.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from blockpoly.constants import LEIBNIZ_BASE_MAX_ORDER
from blockpoly.digraph import WeightedDigraph
from blockpoly.oracles import leibniz_expand
from blockpoly.polynomial import Polynomial, poly_scale
from blockpoly.types import CoefficientMode, VertexId, VertexSet


@dataclass(frozen=True)
class ShiftedDigraph:
    """A weighted digraph read as the matrix A − λI (or A when not shifted)."""

    graph: WeightedDigraph
    shifted: bool = True

    @property
    def mode(self) -> CoefficientMode:
        return self.graph.mode

    @property
    def order(self) -> int:
        return self.graph.order

    def entry(self, u: VertexId, v: VertexId) -> Polynomial:
        weight = self.graph.weight(u, v)
        if u == v and self.shifted:
            return Polynomial.linear(weight, -1, self.mode)
        return Polynomial.constant(weight, self.mode)

    def vertex_multiplier(self, v: VertexId) -> Polynomial:
        """λ − α at v (−α when not shifted)."""
        return -self.entry(v, v)

    def removal_multiplier(self, v: VertexId, cut_index: int) -> Polynomial:
        """(λ − α)(d − 1) for a removed cut-vertex of cut-index d."""
        return poly_scale(self.vertex_multiplier(v), cut_index - 1)

    def induced(self, subset: VertexSet) -> "ShiftedDigraph":
        return ShiftedDigraph(self.graph.induced(subset), self.shifted)

    def sparse_rows(self) -> List[List[Tuple[int, Polynomial]]]:
        """Nonzero entries of each row as (column position, entry)."""
        index = {v: i for i, v in enumerate(self.graph.vertices)}
        rows: List[List[Tuple[int, Polynomial]]] = [[] for _ in self.graph.vertices]
        for (u, v), _ in sorted(self.graph.edges.items()):
            if u != v:
                rows[index[u]].append((index[v], self.entry(u, v)))
        for v in self.graph.vertices:
            diagonal = self.entry(v, v)
            if not diagonal.is_zero:
                rows[index[v]].append((index[v], diagonal))
        for row in rows:
            row.sort(key=lambda item: item[0])
        return rows


def minor_expand(
    rows: List[List[Tuple[int, Polynomial]]], permanent: bool, mode: CoefficientMode
) -> Polynomial:
    """Row-by-row expansion memoized on the set of used columns.

    Exact for both det and per, O(2^n · n) products instead of n!.
    """
    n = len(rows)
    layer: Dict[int, Polynomial] = {0: Polynomial.one(mode)}
    for i in range(n):
        following: Dict[int, Polynomial] = {}
        for mask, value in layer.items():
            for j, entry in rows[i]:
                bit = 1 << j
                if mask & bit:
                    continue
                term = value * entry
                if not permanent and bin(mask >> (j + 1)).count("1") % 2:
                    term = -term
                key = mask | bit
                following[key] = following[key] + term if key in following else term
        layer = following
    return layer.get((1 << n) - 1, Polynomial.zero(mode))


def expand(piece: ShiftedDigraph, permanent: bool) -> Polynomial:
    """φ (or ψ) of a piece by direct expansion of det/per(A − λI)."""
    rows = piece.sparse_rows()
    if piece.order <= LEIBNIZ_BASE_MAX_ORDER:
        one, zero = Polynomial.one(piece.mode), Polynomial.zero(piece.mode)
        return leibniz_expand(rows, permanent, one, zero)
    return minor_expand(rows, permanent, piece.mode)
