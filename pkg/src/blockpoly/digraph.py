"""Weighted digraphs and their conversion to and from square matrices.

A square matrix A of order n is the weighted digraph G(A) on vertices
v1..vn with an edge (u, v) of weight a_uv whenever a_uv is nonzero. Loops
carry the diagonal. Vertex ids are stable labels: induced subdigraphs keep
the labels of their parent, so a vertex subset such as {1, 3} means the same
vertices at every depth of a recursion.
"""

from dataclasses import dataclass, field
from functools import cached_property
from numbers import Complex, Integral
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
import numpy.typing as npt

from blockpoly.constants import MODE_COMPLEX, MODE_INT
from blockpoly.errors import DimensionError, DomainError, ModeError
from blockpoly.types import Coefficient, CoefficientMode, Edge, MatrixLike, VertexId, VertexSet


def is_integral(value: Any) -> bool:
    """True when value is an integer, possibly stored as float or complex."""
    if isinstance(value, Integral):
        return True
    if isinstance(value, Complex):
        z = complex(value)
        return z.imag == 0 and float(z.real).is_integer()
    return False


def coerce_weight(value: Any, mode: CoefficientMode) -> Coefficient:
    """Convert a matrix entry into the coefficient type of mode."""
    if mode == MODE_INT:
        if not is_integral(value):
            raise ModeError(f"Entry {value!r} is not an integer; use complex mode")
        if isinstance(value, Integral):
            return int(value)
        return int(complex(value).real)
    if mode == MODE_COMPLEX:
        return complex(value)
    raise ModeError(f"Unknown coefficient mode: {mode!r}")


def infer_mode(values: Iterable[Any]) -> CoefficientMode:
    """Exact mode when every value is integral, float mode otherwise."""
    return MODE_INT if all(is_integral(v) for v in values) else MODE_COMPLEX


@dataclass(frozen=True)
class WeightedDigraph:
    """Vertex-labeled digraph with integer or complex edge weights.

    Vertices are kept sorted. Zero weights never appear as edges.
    """

    vertices: Tuple[VertexId, ...] = ()
    edges: Dict[Edge, Coefficient] = field(default_factory=dict)
    mode: CoefficientMode = MODE_INT

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise DomainError(f"Duplicate vertex ids in {vertices}")
        known = set(vertices)

        edges: Dict[Edge, Coefficient] = {}
        for (u, v), weight in self.edges.items():
            if u not in known or v not in known:
                raise DomainError(f"Edge ({u}, {v}) has an endpoint outside the vertex set")
            w = coerce_weight(weight, self.mode)
            if w == 0:
                raise DomainError(f"Edge ({u}, {v}) has zero weight")
            edges[(u, v)] = w

        object.__setattr__(self, "vertices", tuple(sorted(vertices)))
        object.__setattr__(self, "edges", edges)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_set(self) -> VertexSet:
        return frozenset(self.vertices)

    @cached_property
    def underlying_graph(self) -> nx.Graph:
        """Undirected connectivity structure; loops dropped."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((u, v) for (u, v) in self.edges if u != v)
        return graph

    def weight(self, u: VertexId, v: VertexId) -> Coefficient:
        return self.edges.get((u, v), 0 if self.mode == MODE_INT else 0j)

    def loop(self, v: VertexId) -> Coefficient:
        """Loop weight at v, the diagonal entry a_vv."""
        return self.weight(v, v)

    def neighbors(self, v: VertexId) -> List[VertexId]:
        return sorted(self.underlying_graph.neighbors(v))

    def degree(self, v: VertexId) -> int:
        """Number of distinct adjacent vertices, ignoring direction and loops."""
        return self.underlying_graph.degree(v)

    def induced(self, subset: Iterable[VertexId]) -> "WeightedDigraph":
        """Induced subdigraph on subset, labels preserved."""
        keep = frozenset(subset)
        unknown = keep - self.vertex_set
        if unknown:
            raise DomainError(f"Unknown vertex ids: {sorted(unknown)}")
        edges = {(u, v): w for (u, v), w in self.edges.items() if u in keep and v in keep}
        return WeightedDigraph(tuple(keep), edges, self.mode)

    def without(self, removed: Iterable[VertexId]) -> "WeightedDigraph":
        """G∖S."""
        drop = frozenset(removed)
        return self.induced(v for v in self.vertices if v not in drop)

    def components(self) -> List["WeightedDigraph"]:
        return components(self)

    def is_simple(self) -> bool:
        """Symmetric 0/1 weights and no loops (adjacency matrix of a simple graph)."""
        for (u, v), w in self.edges.items():
            if u == v or w != 1 or self.edges.get((v, u)) != 1:
                return False
        return True


def digraph_of_matrix(
    matrix: MatrixLike,
    mode: Optional[CoefficientMode] = None,
    labels: Optional[Sequence[VertexId]] = None,
) -> WeightedDigraph:
    """Build G(A): vertices 1..n, an edge (u, v) of weight a_uv iff a_uv != 0."""
    array = matrix if isinstance(matrix, np.ndarray) else np.asarray(matrix, dtype=object)
    if array.shape in ((0,), (0, 0)):
        n = 0
    elif array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise DimensionError(f"Matrix must be square, got shape {array.shape}")
    else:
        n = array.shape[0]

    if labels is None:
        labels = list(range(1, n + 1))
    elif len(labels) != n:
        raise DimensionError(f"Expected {n} vertex labels, got {len(labels)}")

    entries = [[array[i, j] for j in range(n)] for i in range(n)]
    if mode is None:
        mode = infer_mode(x for row in entries for x in row)

    edges: Dict[Edge, Coefficient] = {}
    for i, row in enumerate(entries):
        for j, value in enumerate(row):
            weight = coerce_weight(value, mode)
            if weight != 0:
                edges[(labels[i], labels[j])] = weight
    return WeightedDigraph(tuple(labels), edges, mode)


def matrix_of_digraph(graph: WeightedDigraph) -> npt.NDArray[Any]:
    """Square matrix in label-sorted vertex order.

    Exact digraphs give an object array of Python ints, float ones complex128.
    """
    n = graph.order
    index = {v: i for i, v in enumerate(graph.vertices)}
    if graph.mode == MODE_INT:
        matrix = np.zeros((n, n), dtype=object)
    else:
        matrix = np.zeros((n, n), dtype=complex)
    for (u, v), w in graph.edges.items():
        matrix[index[u], index[v]] = w
    return matrix


def induced_subdigraph(graph: WeightedDigraph, subset: Iterable[VertexId]) -> WeightedDigraph:
    return graph.induced(subset)


def components(graph: WeightedDigraph) -> List[WeightedDigraph]:
    """Weakly connected components ordered by smallest vertex id."""
    pieces = sorted(
        (sorted(c) for c in nx.connected_components(graph.underlying_graph)),
        key=lambda c: c[0],
    )
    return [graph.induced(piece) for piece in pieces]


def digraph_of_graph(graph: nx.Graph) -> WeightedDigraph:
    """Adjacency digraph of a simple networkx graph, nodes relabeled 1..n in sorted order."""
    label = {u: i + 1 for i, u in enumerate(sorted(graph.nodes))}
    edges: Dict[Edge, Coefficient] = {}
    for u, v in graph.edges:
        if u != v:
            edges[(label[u], label[v])] = 1
            edges[(label[v], label[u])] = 1
    return WeightedDigraph(tuple(label.values()), edges)
