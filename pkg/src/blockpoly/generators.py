"""Seeded instance generators for tests, benchmarks and the CLI.

Every generator draws from a ``numpy.random.Generator`` so that a fixed seed
reproduces the same instances.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import numpy.typing as npt

from blockpoly.digraph import WeightedDigraph, digraph_of_graph
from blockpoly.errors import DomainError
from blockpoly.types import Coefficient, Edge, VertexId

logger = logging.getLogger(__name__)


# Simple graphs


def complete_graph(n: int) -> WeightedDigraph:
    return digraph_of_graph(nx.complete_graph(n))


def cycle_graph(n: int) -> WeightedDigraph:
    return digraph_of_graph(nx.cycle_graph(n))


def path_graph(n: int) -> WeightedDigraph:
    return digraph_of_graph(nx.path_graph(n))


def star_graph(leaves: int) -> WeightedDigraph:
    """K_{1,leaves}, center labeled 1."""
    return digraph_of_graph(nx.star_graph(leaves))


def relabel(graph: WeightedDigraph, mapping: Dict[VertexId, VertexId]) -> WeightedDigraph:
    edges = {(mapping[u], mapping[v]): w for (u, v), w in graph.edges.items()}
    return WeightedDigraph(tuple(mapping[v] for v in graph.vertices), edges, graph.mode)


def glue(
    first: WeightedDigraph, second: WeightedDigraph, at_first: VertexId, at_second: VertexId
) -> WeightedDigraph:
    """Identify at_second of ``second`` with at_first of ``first``.

    The other vertices of ``second`` are renumbered after max(V(first)).
    Loop weights at the identified vertex add up.
    """
    if first.mode != second.mode:
        raise DomainError("Cannot glue digraphs of different coefficient modes")
    offset = max(first.vertices, default=0)
    mapping: Dict[VertexId, VertexId] = {}
    for v in second.vertices:
        if v == at_second:
            mapping[v] = at_first
        else:
            offset += 1
            mapping[v] = offset
    moved = relabel(second, mapping)

    edges: Dict[Edge, Coefficient] = dict(first.edges)
    for key, weight in moved.edges.items():
        total = edges.get(key, 0) + weight
        if total == 0:
            edges.pop(key, None)
        else:
            edges[key] = total
    vertices = tuple(sorted(first.vertex_set | moved.vertex_set))
    return WeightedDigraph(vertices, edges, first.mode)


def block_chain(pieces: Sequence[WeightedDigraph]) -> WeightedDigraph:
    """Glue each piece's smallest vertex to the previous piece's largest vertex."""
    if not pieces:
        return WeightedDigraph()
    result = pieces[0]
    for piece in pieces[1:]:
        result = glue(result, piece, max(result.vertices), min(piece.vertices))
    return result


def random_tree(rng: np.random.Generator, n: int) -> nx.Graph:
    """Uniform labeled tree on n vertices from a random Prüfer sequence."""
    if n <= 2:
        return nx.path_graph(n)
    sequence = [int(x) for x in rng.integers(0, n, size=n - 2)]
    return nx.from_prufer_sequence(sequence)


def random_block_graph(
    rng: np.random.Generator, blocks: int, min_size: int = 2, max_size: int = 5
) -> WeightedDigraph:
    """Tree of cliques: each new K_b is glued at a uniformly chosen existing vertex."""
    graph = nx.complete_graph(int(rng.integers(min_size, max_size + 1)))
    for _ in range(blocks - 1):
        size = int(rng.integers(min_size, max_size + 1))
        anchor = int(rng.choice(sorted(graph.nodes)))
        start = graph.number_of_nodes()
        new = [anchor] + list(range(start, start + size - 1))
        graph.add_edges_from((u, v) for i, u in enumerate(new) for v in new[i + 1 :])
    return digraph_of_graph(graph)


# Weighted digraphs


def _random_weight(rng: np.random.Generator, low: int, high: int) -> int:
    while True:
        w = int(rng.integers(low, high + 1))
        if w != 0:
            return w


def random_block(
    rng: np.random.Generator,
    size: int,
    density: float = 0.5,
    weight_range: Tuple[int, int] = (-5, 5),
    loop_probability: float = 0.5,
) -> WeightedDigraph:
    """Integer digraph on 1..size whose underlying graph is 2-connected.

    A Hamiltonian cycle keeps it 2-connected; extra chords appear with
    probability ``density``. Each undirected edge gets one or both arcs.
    """
    low, high = weight_range
    pairs = [(i, i % size + 1) for i in range(1, size + 1)] if size >= 3 else []
    if size == 2:
        pairs = [(1, 2)]
    pairs += [
        (u, v)
        for u in range(1, size + 1)
        for v in range(u + 2, size + 1)
        if not (u == 1 and v == size) and rng.random() < density
    ]

    edges: Dict[Edge, Coefficient] = {}
    for u, v in pairs:
        direction = int(rng.integers(3))
        if direction in (0, 2):
            edges[(u, v)] = _random_weight(rng, low, high)
        if direction in (1, 2):
            edges[(v, u)] = _random_weight(rng, low, high)
    for v in range(1, size + 1):
        if rng.random() < loop_probability:
            edges[(v, v)] = _random_weight(rng, low, high)
    return WeightedDigraph(tuple(range(1, size + 1)), edges)


def planted_cut_digraph(
    rng: np.random.Generator,
    block_sizes: Sequence[int],
    density: float = 0.5,
    weight_range: Tuple[int, int] = (-5, 5),
    loop_probability: float = 0.5,
) -> WeightedDigraph:
    """Random integer digraph built from 2-connected blocks glued in a tree.

    Block i > 0 is glued at a uniformly chosen vertex of the digraph built so
    far, so the glue vertices are exactly the cut-vertices.
    """
    graph = random_block(rng, block_sizes[0], density, weight_range, loop_probability)
    for size in block_sizes[1:]:
        block = random_block(rng, size, density, weight_range, loop_probability)
        anchor = int(rng.choice(graph.vertices))
        graph = glue(graph, block, anchor, 1)
    return graph


def random_planted_instance(
    rng: np.random.Generator, max_order: int = 8, max_cuts: int = 3
) -> WeightedDigraph:
    """Planted digraph of order ≤ max_order with 1..max_cuts glue points."""
    while True:
        blocks = int(rng.integers(2, max_cuts + 2))
        sizes = [int(rng.integers(2, 5)) for _ in range(blocks)]
        if sum(sizes) - (blocks - 1) <= max_order:
            return planted_cut_digraph(rng, sizes)


def random_matrix(
    rng: np.random.Generator, n: int, low: int = -5, high: int = 5, density: float = 1.0
) -> npt.NDArray[Any]:
    """Object array of random Python ints; entries are zeroed with probability 1 − density."""
    values = rng.integers(low, high + 1, size=(n, n))
    mask = rng.random((n, n)) < density
    matrix = np.empty((n, n), dtype=object)
    for index, value in np.ndenumerate(values * mask):
        matrix[index] = int(value)
    return matrix


def random_float_matrix(
    rng: np.random.Generator, n: int, scale: float = 1.0
) -> npt.NDArray[np.float64]:
    return rng.standard_normal((n, n)) * scale


def singular_minor_matrix(
    rng: np.random.Generator, n: int, d: int = 0, high: int = 5
) -> npt.NDArray[Any]:
    """Dense integer matrix whose trailing (n−1)×(n−1) block is singular.

    Entries off the (1, 1) position are positive, so the underlying graph is
    complete and vertex 1 is the first elimination pivot; ``d`` is a_11.
    """
    if n < 3:
        raise DomainError("Need order at least 3")
    inner = rng.integers(1, high + 1, size=(n - 1, n - 1))
    i, j = rng.choice(n - 2, size=2, replace=n - 2 < 2)
    inner[-1] = inner[i] + inner[j]
    matrix = np.empty((n, n), dtype=object)
    matrix[0, 0] = int(d)
    for k in range(1, n):
        matrix[0, k] = int(rng.integers(1, high + 1))
        matrix[k, 0] = int(rng.integers(1, high + 1))
    for (r, c), value in np.ndenumerate(inner):
        matrix[r + 1, c + 1] = int(value)
    return matrix


def staircase_matrix(rng: np.random.Generator, n: int, high: int = 3) -> npt.NDArray[Any]:
    """Nonsingular integer matrix that exact elimination in label order reduces to order 2.

    Rows 1..n−2 vanish right of the superdiagonal, row n−1 is full and row n
    is a multiple of e_1. Eliminating v1, v2, ... keeps that shape: what is
    left of row n is a multiple of the current pivot's unit vector, so every
    A1 met has a zero row, and every level stays 2-connected. The diagonal
    of rows 1..n−2 is planted so each pivot entry met is 0 or ±1.
    """
    if n < 3:
        raise DomainError("Need order at least 3")

    def nonzero() -> int:
        return int(rng.choice([-1, 1])) * int(rng.integers(1, high + 1))

    matrix = np.zeros((n, n), dtype=object)
    for t in range(n - 2):
        for j in range(t):
            matrix[t, j] = nonzero()
        matrix[t, t + 1] = nonzero()
    for j in range(n):
        matrix[n - 2, j] = nonzero()
    matrix[n - 1, 0] = nonzero()

    # Pivot t's entry is its diagonal plus corrections that do not involve it
    work = matrix.copy()
    for t in range(n - 2):
        target = int(rng.choice([0, 1, -1]))
        matrix[t, t] += target - work[t, t]
        work[t, t] = target
        factor = 1 if target == 0 else target
        rest = slice(t + 1, n)
        update = np.multiply.outer(work[rest, t], work[t, rest]) * factor
        work[rest, rest] = work[rest, rest] - update
    return matrix


# Singular simple graphs, one family per singularity condition


def _random_rest(rng: np.random.Generator) -> WeightedDigraph:
    """A small connected simple graph to hang the singular part on."""
    kind = int(rng.integers(3))
    if kind == 0:
        return random_block_graph(rng, int(rng.integers(1, 3)), max_size=4)
    if kind == 1:
        return cycle_graph(int(rng.integers(3, 6)))
    return digraph_of_graph(random_tree(rng, int(rng.integers(2, 5))))


def _singular_even_tree(rng: np.random.Generator) -> nx.Graph:
    """Random tree of even order without a perfect matching."""
    while True:
        n = 2 * int(rng.integers(2, 4))
        tree = random_tree(rng, n)
        if len(nx.max_weight_matching(tree, maxcardinality=True)) * 2 < n:
            return tree


def _random_tree_of_parity(rng: np.random.Generator, odd: bool) -> WeightedDigraph:
    n = 2 * int(rng.integers(1, 3)) + (1 if odd else 0)
    return digraph_of_graph(random_tree(rng, n))


def singular_instance(rng: np.random.Generator, condition: int) -> WeightedDigraph:
    """Simple graph built to satisfy singularity condition 1, 2, 3 or 4."""
    if condition == 1:
        rest = _random_rest(rng)
        cycle = cycle_graph(4 * int(rng.integers(1, 3)))
        return glue(rest, cycle, int(rng.choice(rest.vertices)), 1)

    if condition == 2:
        rest = _random_rest(rng)
        v = int(rng.choice(rest.vertices))
        for _ in range(2):
            rest = glue(rest, cycle_graph(2 * int(rng.integers(2, 4))), v, 1)
        return rest

    if condition == 3:
        rest = _random_rest(rng)
        tree = digraph_of_graph(_singular_even_tree(rng))
        return glue(rest, tree, int(rng.choice(rest.vertices)), int(rng.choice(tree.vertices)))

    if condition == 4:
        odd = bool(rng.integers(2))
        trees = [_random_tree_of_parity(rng, odd) for _ in range(2 + int(rng.integers(2)))]
        graph = trees[0]
        v = int(rng.choice(graph.vertices))
        for tree in trees[1:]:
            graph = glue(graph, tree, v, int(rng.choice(tree.vertices)))
        if not odd:
            rest = _random_rest(rng)
            graph = glue(graph, rest, v, int(rng.choice(rest.vertices)))
        return graph

    raise DomainError(f"Unknown singularity condition {condition}")


def singular_instances(
    condition: int, count: int = 10, seed: Optional[int] = None
) -> List[WeightedDigraph]:
    rng = np.random.default_rng(seed)
    return [singular_instance(rng, condition) for _ in range(count)]
