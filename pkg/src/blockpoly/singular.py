"""Sufficient conditions for a simple graph to be singular.

Each condition forces every term of the loop-free determinant expansion to
contain the determinant of a singular piece: a cycle of length 4r, a path of
odd order, or a tree without a perfect matching.

1. a pendant block is a cycle C_n with n ≡ 0 (mod 4)
2. two pendant cycles of even length share their cut-vertex
3. a tree of even order hangs at a cut-vertex and is singular
4. two trees hang at a shared cut-vertex with orders of equal parity
   (counting the cut-vertex); for odd orders every branch at that vertex
   must be such a tree
"""

import itertools
import logging
from typing import Dict, List, Tuple

import networkx as nx

from blockpoly.blocks import BlockDecomposition, decompose
from blockpoly.determinant import determinant
from blockpoly.digraph import WeightedDigraph
from blockpoly.errors import DomainError
from blockpoly.types import VertexId, VertexSet

logger = logging.getLogger(__name__)


def _pendant_cycles(
    graph: WeightedDigraph, decomposition: BlockDecomposition
) -> List[Tuple[VertexId, int]]:
    """(cut-vertex, length) of every pendant block that is a cycle."""
    found = []
    for index, cuts in decomposition.incidence.items():
        block = decomposition.blocks[index]
        if len(cuts) != 1 or len(block) < 3:
            continue
        sub = graph.underlying_graph.subgraph(block)
        if all(d == 2 for _, d in sub.degree()):
            found.append((cuts[0], len(block)))
    return found


def _branches(graph: WeightedDigraph, v: VertexId) -> List[VertexSet]:
    """Components of G∖v that touch v."""
    underlying = graph.underlying_graph
    around = nx.node_connected_component(underlying, v) - {v}
    return [frozenset(c) for c in nx.connected_components(underlying.subgraph(around))]


def _tree_branches(graph: WeightedDigraph, v: VertexId) -> Tuple[List[VertexSet], int]:
    """Branches at v which together with v induce a tree, and the branch count."""
    branches = _branches(graph, v)
    underlying = graph.underlying_graph
    trees = [b for b in branches if nx.is_tree(underlying.subgraph(b | {v}))]
    return trees, len(branches)


def _pendant_cycle_4r(pendant_cycles: List[Tuple[VertexId, int]]) -> bool:
    return any(length % 4 == 0 for _, length in pendant_cycles)


def _even_pendant_cycle_pair(pendant_cycles: List[Tuple[VertexId, int]]) -> bool:
    even_at: Dict[VertexId, int] = {}
    for v, length in pendant_cycles:
        if length % 2 == 0:
            even_at[v] = even_at.get(v, 0) + 1
    return any(count >= 2 for count in even_at.values())


def _singular_even_tree(graph: WeightedDigraph, decomposition: BlockDecomposition) -> bool:
    for v in decomposition.cut_vertices:
        trees, _ = _tree_branches(graph, v)
        for size in range(1, len(trees) + 1):
            for chosen in itertools.combinations(trees, size):
                hanging = frozenset({v}).union(*chosen)
                if len(hanging) % 2 == 0 and determinant(graph.induced(hanging)) == 0:
                    logger.debug(f"Singular even tree {sorted(hanging)} at cut-vertex {v}")
                    return True
    return False


def _parity_matched_trees(graph: WeightedDigraph, decomposition: BlockDecomposition) -> bool:
    for v in decomposition.cut_vertices:
        trees, branch_count = _tree_branches(graph, v)
        orders = [len(t) + 1 for t in trees]
        evens = [n for n in orders if n % 2 == 0]
        if len(evens) >= 2:
            return True
        odds = [n for n in orders if n % 2 == 1]
        if len(odds) >= 2 and len(odds) == branch_count:
            return True
    return False


def singularity_conditions(graph: WeightedDigraph) -> List[int]:
    """Ids (1-4) of the singularity conditions satisfied by a simple graph.

    Any nonempty result implies det(A(G)) = 0.

    Raises:
        DomainError: the digraph is not a simple graph
    """
    if not graph.is_simple():
        raise DomainError("Singularity conditions apply to simple graphs only")

    decomposition = decompose(graph)
    pendant_cycles = _pendant_cycles(graph, decomposition)
    checks = [
        (1, lambda: _pendant_cycle_4r(pendant_cycles)),
        (2, lambda: _even_pendant_cycle_pair(pendant_cycles)),
        (3, lambda: _singular_even_tree(graph, decomposition)),
        (4, lambda: _parity_matched_trees(graph, decomposition)),
    ]
    fired = [condition for condition, check in checks if check()]
    logger.debug(f"Singularity conditions satisfied: {fired}")
    return fired
