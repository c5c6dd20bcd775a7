"""Determinants of block graphs through k-tuples of part sizes.

For a simple graph whose blocks B_1..B_k are complete graphs of orders
b_1..b_k,

    det(A) = (−1)^(n−k) Σ ∏ (α_i − 1)

over every k-tuple of non-negative integers with Σ α_i = n and, for every
nonempty S ⊆ {1..k}, Σ_{i∈S} α_i ≤ |∪_{i∈S} B_i|. These tuples are exactly
the part sizes of the B-partitions of G, one tuple per B-partition.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Tuple

import numpy as np
import numpy.typing as npt

from blockpoly.blocks import BlockDecomposition, decompose
from blockpoly.bpartition import enumerate_bpartitions
from blockpoly.constants import KTUPLE_SUBSET_MAX_BLOCKS
from blockpoly.digraph import WeightedDigraph
from blockpoly.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KTuple:
    """Part sizes α_1..α_k, one per block in block order."""

    alphas: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.alphas)

    @property
    def product(self) -> int:
        """∏ (α_i − 1), the tuple's contribution before the global sign."""
        return math.prod(a - 1 for a in self.alphas)

    def to_json(self) -> List[int]:
        return list(self.alphas)


def is_block_graph(graph: WeightedDigraph) -> bool:
    """True iff G is simple and every block induces a complete graph."""
    if not graph.is_simple():
        return False
    underlying = graph.underlying_graph
    for block in decompose(graph).blocks:
        size = len(block)
        if underlying.subgraph(block).number_of_edges() != size * (size - 1) // 2:
            return False
    return True


def _require_block_graph(graph: WeightedDigraph) -> BlockDecomposition:
    if not is_block_graph(graph):
        raise DomainError("Expected a simple graph whose blocks are all complete graphs")
    return decompose(graph)


class _SubsetBounds:
    """Union sizes |∪_{i∈S} B_i| for every block subset, as bitmask tables."""

    def __init__(self, decomposition: BlockDecomposition):
        blocks = decomposition.blocks
        k = len(blocks)
        index = {v: i for i, v in enumerate(sorted(decomposition.vertices))}
        block_bits = [sum(1 << index[v] for v in block) for block in blocks]

        unions = [0] * (1 << k)
        for mask in range(1, 1 << k):
            low = (mask & -mask).bit_length() - 1
            unions[mask] = unions[mask & (mask - 1)] | block_bits[low]
        self.union_size = np.array([u.bit_count() for u in unions], dtype=np.int64)

        # Subsets of {0..i} containing i, checked once α_i is fixed.
        self.membership: List[npt.NDArray[np.int64]] = []
        self.limits: List[npt.NDArray[np.int64]] = []
        for i in range(k):
            masks = np.arange(1 << i, dtype=np.int64) | (1 << i)
            bits = (masks[:, None] >> np.arange(i + 1)) & 1
            self.membership.append(bits)
            self.limits.append(self.union_size[masks])

        # |∪_{j>i} B_j|, the most the remaining blocks can still absorb.
        self.suffix_union = [0] * (k + 1)
        suffix = 0
        for i in range(k - 1, -1, -1):
            suffix |= block_bits[i]
            self.suffix_union[i] = suffix.bit_count()

    def admissible(self, alphas: npt.NDArray[np.int64], i: int) -> bool:
        return bool(np.all(self.membership[i] @ alphas[: i + 1] <= self.limits[i]))


def _enumerate_ktuples(decomposition: BlockDecomposition, n: int) -> Iterator[KTuple]:
    sizes = [len(block) for block in decomposition.blocks]
    k = len(sizes)
    if k == 0:
        yield KTuple(())
        return

    bounds = _SubsetBounds(decomposition)
    alphas = np.zeros(k, dtype=np.int64)

    def search(i: int, prefix: int) -> Iterator[KTuple]:
        for alpha in range(sizes[i] + 1):
            alphas[i] = alpha
            total = prefix + alpha
            if total > n:
                break
            if total < n - bounds.suffix_union[i + 1]:
                continue
            if not bounds.admissible(alphas, i):
                continue
            if i == k - 1:
                if total == n:
                    yield KTuple(tuple(int(a) for a in alphas))
            else:
                yield from search(i + 1, total)
        alphas[i] = 0

    yield from search(0, 0)


def ktuples_from_bpartitions(graph: WeightedDigraph) -> List[KTuple]:
    """Part sizes of every B-partition, in B-partition order."""
    decomposition = _require_block_graph(graph)
    return [
        KTuple(tuple(len(part) for part in partition.parts))
        for partition in enumerate_bpartitions(graph, decomposition)
    ]


def feasible_ktuples(graph: WeightedDigraph) -> List[KTuple]:
    """Every k-tuple meeting the sum and subset-union conditions, lexicographic.

    Above KTUPLE_SUBSET_MAX_BLOCKS blocks the subset tables get too large and
    the tuples are read off the B-partitions instead.

    Raises:
        DomainError: G is not a block graph
    """
    decomposition = _require_block_graph(graph)
    if decomposition.block_count > KTUPLE_SUBSET_MAX_BLOCKS:
        logger.debug(
            f"{decomposition.block_count} blocks; taking k-tuples from B-partitions"
        )
        return sorted(ktuples_from_bpartitions(graph), key=lambda t: t.alphas)
    tuples = list(_enumerate_ktuples(decomposition, graph.order))
    logger.debug(f"{len(tuples)} feasible k-tuple(s) over {decomposition.block_count} block(s)")
    return tuples


def det_block_graph(graph: WeightedDigraph) -> int:
    """det(A(G)) = (−1)^(n−k) Σ ∏(α_i − 1) over the feasible k-tuples.

    Raises:
        DomainError: G is not a block graph
    """
    tuples = feasible_ktuples(graph)
    k = decompose(graph).block_count
    sign = -1 if (graph.order - k) % 2 else 1
    return sign * sum(t.product for t in tuples)


def explain_block_graph(graph: WeightedDigraph) -> Dict[str, Any]:
    """Block sizes, feasible tuples and the resulting determinant as JSON."""
    tuples = feasible_ktuples(graph)
    decomposition = decompose(graph)
    sign = -1 if (graph.order - decomposition.block_count) % 2 else 1
    return {
        "block_sizes": [len(block) for block in decomposition.blocks],
        "ktuples": [t.to_json() for t in tuples],
        "determinant": sign * sum(t.product for t in tuples),
    }
