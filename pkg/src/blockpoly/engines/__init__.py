"""Polynomial engines for blockpoly."""

from typing import Dict, Type, Union

from blockpoly.engines.base import EngineContext, PolynomialEngine
from blockpoly.engines.expansion import ShiftedDigraph, expand, minor_expand
from blockpoly.engines.oracle import OracleEngine
from blockpoly.engines.recursive import (
    RecursiveEngine,
    charpoly_recursive,
    charpoly_single_cut,
    permpoly_recursive,
    permpoly_single_cut,
    single_cut_closed_form,
    subdigraph_recurrence,
)
from blockpoly.engines.theorem import (
    TheoremEngine,
    TheoremTerm,
    charpoly_theorem,
    permpoly_theorem,
    theorem_terms,
)
from blockpoly.errors import ConfigError

_ENGINES: Dict[str, Type[Union[TheoremEngine, RecursiveEngine, OracleEngine]]] = {
    TheoremEngine.name: TheoremEngine,
    RecursiveEngine.name: RecursiveEngine,
    OracleEngine.name: OracleEngine,
}


def get_engine(name: str) -> PolynomialEngine:
    """Engine instance by name: theorem, recursive or oracle."""
    try:
        return _ENGINES[name]()
    except KeyError:
        raise ConfigError(
            f"Unknown polynomial engine {name!r}; choose one of {sorted(_ENGINES)}"
        ) from None


__all__ = [
    "EngineContext",
    "PolynomialEngine",
    "ShiftedDigraph",
    "expand",
    "minor_expand",
    "TheoremEngine",
    "TheoremTerm",
    "RecursiveEngine",
    "OracleEngine",
    "get_engine",
    "charpoly_theorem",
    "permpoly_theorem",
    "theorem_terms",
    "charpoly_recursive",
    "permpoly_recursive",
    "charpoly_single_cut",
    "permpoly_single_cut",
    "single_cut_closed_form",
    "subdigraph_recurrence",
]
