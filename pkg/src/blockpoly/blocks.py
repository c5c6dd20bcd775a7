"""Blocks, cut-vertices and cut-indices of a weighted digraph.

Blocks are the biconnected components of the underlying undirected graph:
an edge joins u and v when (u, v) or (v, u) is an edge, loops are ignored.
Bridges are 2-vertex blocks and isolated vertices are 1-vertex blocks, so
the blocks cover every vertex.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from blockpoly.digraph import WeightedDigraph
from blockpoly.types import VertexId, VertexSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks B_0..B_{k-1} with their cut-vertices.

    ``cut_index[v]`` is the number of blocks containing cut-vertex v and
    ``incidence[i]`` lists the cut-vertices lying in block i.
    """

    blocks: Tuple[VertexSet, ...]
    cut_vertices: Tuple[VertexId, ...]
    cut_index: Dict[VertexId, int]
    incidence: Dict[int, Tuple[VertexId, ...]]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def vertices(self) -> VertexSet:
        return frozenset().union(*self.blocks)

    def blocks_containing(self, v: VertexId) -> Tuple[int, ...]:
        return tuple(i for i, block in enumerate(self.blocks) if v in block)

    def restrict(self, removed: Iterable[VertexId]) -> "BlockDecomposition":
        """Original blocks with the removed cut-vertices deleted.

        The remaining cut-vertices keep their original cut-index and block
        incidence. Blocks may become empty or disconnected; B-partitions of
        G∖Q in the cut-vertex removal sum are taken over this structure.
        """
        drop = frozenset(removed)
        blocks = tuple(block - drop for block in self.blocks)
        cut_vertices = tuple(v for v in self.cut_vertices if v not in drop)
        return BlockDecomposition(
            blocks=blocks,
            cut_vertices=cut_vertices,
            cut_index={v: self.cut_index[v] for v in cut_vertices},
            incidence={
                i: tuple(v for v in cuts if v not in drop) for i, cuts in self.incidence.items()
            },
        )

    def to_json(self) -> Dict[str, object]:
        return {
            "blocks": [sorted(block) for block in self.blocks],
            "cut_vertices": list(self.cut_vertices),
            "cut_index": {str(v): d for v, d in self.cut_index.items()},
            "pendant_blocks": pendant_blocks(self),
        }


def _block_sort_key(block: FrozenSet[VertexId]) -> Tuple[VertexId, ...]:
    return tuple(sorted(block))


def decompose(graph: WeightedDigraph) -> BlockDecomposition:
    """Block decomposition, blocks ordered by their sorted vertex tuples."""
    underlying = graph.underlying_graph
    found: List[VertexSet] = [frozenset(c) for c in nx.biconnected_components(underlying)]
    found.extend(frozenset({v}) for v in graph.vertices if underlying.degree(v) == 0)
    blocks = tuple(sorted(found, key=_block_sort_key))

    counts: Dict[VertexId, int] = {}
    for block in blocks:
        for v in block:
            counts[v] = counts.get(v, 0) + 1
    cut_vertices = tuple(sorted(v for v, c in counts.items() if c >= 2))
    cut_set = frozenset(cut_vertices)

    decomposition = BlockDecomposition(
        blocks=blocks,
        cut_vertices=cut_vertices,
        cut_index={v: counts[v] for v in cut_vertices},
        incidence={i: tuple(sorted(block & cut_set)) for i, block in enumerate(blocks)},
    )
    logger.debug(
        f"Decomposed order-{graph.order} digraph into {len(blocks)} block(s), "
        f"cut-vertices {list(cut_vertices)}"
    )
    return decomposition


def pendant_blocks(decomposition: BlockDecomposition) -> List[int]:
    """Indices of blocks holding at most one cut-vertex."""
    return [i for i, cuts in decomposition.incidence.items() if len(cuts) <= 1]


def block_count(graph: WeightedDigraph) -> int:
    """b(G), the number of blocks."""
    return decompose(graph).block_count
