"""Check every engine against every applicable oracle on one input."""

import logging
from typing import Any, Callable, List, Optional, Tuple, Union

from blockpoly.block_graph import det_block_graph, is_block_graph
from blockpoly.constants import (
    ENGINE_BLOCKGRAPH,
    ENGINE_RECURSIVE,
    ENGINE_SCHUR,
    ENGINE_THEOREM,
    FADDEEV_MAX_ORDER,
    FLOAT_REL_TOL,
    LEIBNIZ_ORACLE_MAX_ORDER,
    MODE_INT,
    SCHUR_VERIFY_RTOL,
)
from blockpoly.determinant import determinant, permanent
from blockpoly.digraph import WeightedDigraph, digraph_of_matrix, matrix_of_digraph
from blockpoly.engines import EngineContext, get_engine
from blockpoly.oracles import (
    OracleReport,
    OracleValue,
    compare_values,
    faddeev_leverrier,
    leibniz_charpoly,
    leibniz_det,
    leibniz_per,
    leibniz_permpoly,
)
from blockpoly.schur import det_schur
from blockpoly.types import MatrixLike

logger = logging.getLogger(__name__)

POLYNOMIAL_CHECKS = [ENGINE_THEOREM, ENGINE_RECURSIVE]


def _report(
    subject: str,
    quantity: str,
    engine: str,
    oracle: str,
    engine_value: OracleValue,
    oracle_value: OracleValue,
    rel_tol: float = FLOAT_REL_TOL,
) -> OracleReport:
    equal, deviation = compare_values(engine_value, oracle_value, rel_tol)
    report = OracleReport(
        subject=subject,
        quantity=quantity,
        engine=engine,
        oracle=oracle,
        engine_value=engine_value,
        oracle_value=oracle_value,
        equal=equal,
        deviation=deviation,
    )
    if not equal:
        logger.warning(str(report))
    return report


def verify(
    source: Union[WeightedDigraph, MatrixLike],
    subject: str = "input",
    workers: int = 1,
    rel_tol: Optional[float] = None,
) -> List[OracleReport]:
    """Run all engines against the Leibniz and Faddeev-LeVerrier references.

    Leibniz checks run up to order 10. Faddeev-LeVerrier checks φ in float
    mode and, in exact mode, above the Leibniz cap. Larger inputs get no
    reports.
    """
    graph = source if isinstance(source, WeightedDigraph) else digraph_of_matrix(source)
    exact = graph.mode == MODE_INT
    tolerance = FLOAT_REL_TOL if rel_tol is None else rel_tol
    matrix = matrix_of_digraph(graph)
    n = graph.order
    reports: List[OracleReport] = []

    def check(quantity: str, engine: str, oracle: str, *values: Any) -> OracleReport:
        return _report(subject, quantity, engine, oracle, *values)

    def polynomial(engine: str, permanent_poly: bool) -> OracleValue:
        context = EngineContext(permanent=permanent_poly, workers=workers)
        return get_engine(engine).polynomial(graph, context)

    scalar_checks: List[Tuple[str, Callable[[], OracleValue]]] = [
        (engine, lambda engine=engine: determinant(graph, engine, workers))
        for engine in POLYNOMIAL_CHECKS
    ]
    scalar_checks.append((ENGINE_SCHUR, lambda: det_schur(graph)))
    if graph.is_simple() and is_block_graph(graph):
        scalar_checks.append((ENGINE_BLOCKGRAPH, lambda: det_block_graph(graph)))

    if n <= LEIBNIZ_ORACLE_MAX_ORDER:
        charpoly, permpoly = leibniz_charpoly(matrix), leibniz_permpoly(matrix)
        det, per = leibniz_det(matrix), leibniz_per(matrix)
        for engine in POLYNOMIAL_CHECKS:
            value = polynomial(engine, False)
            reports.append(check("charpoly", engine, "leibniz", value, charpoly, tolerance))
            value = polynomial(engine, True)
            reports.append(check("permpoly", engine, "leibniz", value, permpoly, tolerance))
        for engine, compute in scalar_checks:
            det_tolerance = tolerance if exact or engine != ENGINE_SCHUR else SCHUR_VERIFY_RTOL
            reports.append(check("det", engine, "leibniz", compute(), det, det_tolerance))
        for engine in POLYNOMIAL_CHECKS:
            value = permanent(graph, engine, workers)
            reports.append(check("per", engine, "leibniz", value, per, tolerance))

    if n <= FADDEEV_MAX_ORDER and (not exact or n > LEIBNIZ_ORACLE_MAX_ORDER):
        reference = faddeev_leverrier(matrix)
        float_tolerance = max(tolerance, SCHUR_VERIFY_RTOL)
        for engine in POLYNOMIAL_CHECKS:
            value = polynomial(engine, False)
            reports.append(
                check("charpoly", engine, "faddeev-leverrier", value, reference, float_tolerance)
            )

    failed = sum(1 for r in reports if not r.equal)
    logger.info(f"{subject}: {len(reports)} check(s), {failed} mismatch(es)")
    return reports
