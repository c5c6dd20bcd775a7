"""Base engine protocol for computing φ and ψ of a weighted digraph."""

from dataclasses import dataclass
from typing import Protocol

from blockpoly.constants import DEFAULT_WORKERS
from blockpoly.digraph import WeightedDigraph
from blockpoly.polynomial import Polynomial


@dataclass
class EngineContext:
    """What to compute and how.

    ``permanent`` selects ψ over φ; ``shifted=False`` computes the λ = 0
    specialization (det or per) without ever building λ terms.
    """

    permanent: bool = False
    shifted: bool = True
    workers: int = DEFAULT_WORKERS


class PolynomialEngine(Protocol):
    """Protocol for polynomial engines.

    Engines take a digraph in its plain (unshifted) form and apply the λ
    shift themselves.
    - TheoremEngine: cut-vertex removal sum over B-partitions
    - RecursiveEngine: pendant-block recurrence
    - OracleEngine: Leibniz expansion of the whole matrix
    """

    name: str

    def polynomial(self, graph: WeightedDigraph, context: EngineContext) -> Polynomial:
        """Compute φ(G) or ψ(G) (det/per as a constant when not shifted).

        Args:
            graph: Digraph of A
            context: Selection of polynomial kind, shift and parallelism

        Returns:
            The polynomial in the digraph's coefficient mode
        """
        ...
