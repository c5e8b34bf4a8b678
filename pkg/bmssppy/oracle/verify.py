from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..graph import Graph, OpCounters, PathKey
from ..utils import Logger
from .dijkstra import run_dijkstra

log = Logger(name="Verify")


@dataclass
class VerifyReport:
    """
    Outcome of a differential check against the Dijkstra oracle.

    Attributes:
        equal (bool): True iff no mismatch was found.
        first_mismatch (Optional[Tuple[int, float, float]]): (vertex, expected, got).
        counters (Dict[str, OpCounters]): Operation counts per algorithm.
    """

    equal: bool
    first_mismatch: Optional[Tuple[int, float, float]] = None
    counters: Dict[str, OpCounters] = field(default_factory=dict)


def oracle_keys(g: Graph, s: int) -> Tuple[List[Optional[PathKey]], List[Optional[int]]]:
    """
    Final path key and predecessor of every vertex under the path total order.

    Returns:
        Tuple: keys (None when unreachable) and predecessors.
    """
    state = run_dijkstra(g, s)
    keys = [
        state.key(v) if state.hops[v] else None for v in range(g.vertex_count)
    ]
    return keys, state.pred


def verify(
    g: Graph,
    s: int,
    candidate: Sequence[float],
    candidate_counters: Optional[OpCounters] = None,
) -> VerifyReport:
    """
    Compare candidate distances against Dijkstra for exact equality.

    Args:
        g (Graph): The graph.
        s (int): Source vertex.
        candidate (Sequence[float]): One distance per vertex.
        candidate_counters (Optional[OpCounters]): Reported alongside the oracle's.

    Returns:
        VerifyReport: Equality flag and the first differing vertex.
    """
    state = run_dijkstra(g, s)
    counters = {"dijkstra": state.counters}
    if candidate_counters is not None:
        counters["candidate"] = candidate_counters
    if len(candidate) != g.vertex_count:
        log.warning(
            f"Candidate has {len(candidate)} entries for {g.vertex_count} vertices"
        )
        vertex = min(len(candidate), g.vertex_count)
        expected = state.dhat[vertex] if vertex < g.vertex_count else float("nan")
        got = candidate[vertex] if vertex < len(candidate) else float("nan")
        return VerifyReport(False, (vertex, expected, got), counters)
    for vertex, (expected, got) in enumerate(zip(state.dhat, candidate)):
        if expected != got:
            log.warning(f"Mismatch at vertex {vertex}: expected {expected!r}, got {got!r}")
            return VerifyReport(False, (vertex, expected, got), counters)
    return VerifyReport(True, None, counters)
