from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from ..errors import InvariantViolation
from ..graph import INFINITY, Graph, OpCounters, SsspState, TransformedGraph, to_constant_degree
from ..oracle import dijkstra_into, oracle_keys
from ..utils import Logger, RuntimeHelper
from .bmssp import SolverContext, bmssp
from .instrument import Instrumentation, NodeChecker, TraceRecord
from .params import SolverOptions, SolverParams, compute_params

log = Logger(name="Solver")


@dataclass
class SolveReport:
    """
    Result of one single-source solve on the original graph.

    Attributes:
        distances (List[float]): Per original vertex; inf when unreachable.
        predecessors (List[Optional[int]]): Original predecessor on the
            shortest path; None for the source and unreachable vertices.
        counters (OpCounters): Comparisons and additions spent.
        params (SolverParams): Recursion parameters used.
        trace (Optional[List[TraceRecord]]): One record per recursion node.
        stats (Dict[str, Any]): Instrumentation totals and graph sizes.
    """

    distances: List[float]
    predecessors: List[Optional[int]]
    counters: OpCounters
    params: SolverParams
    trace: Optional[List[TraceRecord]] = None
    stats: Dict[str, Any] = field(default_factory=dict)

    def trace_frame(self) -> pd.DataFrame:
        """The trace as a DataFrame (empty when tracing was off)."""
        return RuntimeHelper.to_df(self.trace or [])


def _original_predecessors(tg: TransformedGraph, state: SsspState) -> List[Optional[int]]:
    """Walk pred links back across each vertex's zero-weight cycle."""
    result: List[Optional[int]] = []
    for vertex, node in enumerate(tg.representative):
        previous = state.pred[node]
        while previous is not None and tg.origin[previous] == vertex:
            previous = state.pred[previous]
        result.append(tg.origin[previous] if previous is not None else None)
    return result


def solve_sssp(
    g: Graph, s: int, options: Optional[SolverOptions] = None
) -> SolveReport:
    """
    Single-source shortest paths by bounded multi-source recursion.

    The graph is made constant-degree, the recursion runs from the source's
    representative with an infinite bound, and distances are read back
    through the representatives.

    Args:
        g (Graph): Directed graph with non-negative weights.
        s (int): Source vertex.
        options (Optional[SolverOptions]): Run-time switches.

    Raises:
        BadVertexId: If s is out of range.
        InvariantViolation: In verification mode, on any failed node check,
            and always if the top-level call is not successful.

    Returns:
        SolveReport: Distances, predecessors, counters and instrumentation.
    """
    options = options or SolverOptions()
    g.check_vertex(s)
    tg = to_constant_degree(g)
    graph = tg.graph
    root = tg.representative[s]
    state = SsspState.for_source(graph.vertex_count, root)
    params = compute_params(graph.vertex_count)
    instrumentation = Instrumentation(trace=options.trace)
    log.info(
        f"Solving from {s}: n={g.vertex_count} m={g.edge_count} -> "
        f"transformed n={graph.vertex_count} m={graph.edge_count}, "
        f"k={params.k} t={params.t} l={params.l_top}"
    )

    fallback = graph.vertex_count < options.small_threshold and not options.force_bmssp
    if fallback:
        log.debug("Small instance: running Dijkstra directly")
        dijkstra_into(graph, state, root)
    else:
        checker = None
        if options.verify:
            keys, preds = oracle_keys(graph, root)
            checker = NodeChecker(state, params, keys, preds)
        ctx = SolverContext(
            graph=graph,
            state=state,
            params=params,
            options=options,
            instrumentation=instrumentation,
            checker=checker,
        )
        result = bmssp(ctx, params.l_top, INFINITY, {root})
        if result.b_prime != INFINITY:
            raise InvariantViolation(
                f"Top-level call ended early with B'={result.b_prime}"
            )

    distances = [state.dhat[node] for node in tg.representative]
    stats: Dict[str, Any] = {
        "transformed_vertices": graph.vertex_count,
        "transformed_edges": graph.edge_count,
        "fallback": fallback,
        **instrumentation.as_dict(),
    }
    log.info(
        f"Solved: comparisons={state.counters.comparisons} "
        f"additions={state.counters.additions} nodes={instrumentation.nodes}"
    )
    return SolveReport(
        distances=distances,
        predecessors=_original_predecessors(tg, state),
        counters=state.counters,
        params=params,
        trace=instrumentation.trace,
        stats=stats,
    )
