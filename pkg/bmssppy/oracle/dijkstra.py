from typing import List, Tuple

from ..graph import CountingHeap, Graph, OpCounters, SsspState, try_relax


def dijkstra_into(graph: Graph, state: SsspState, source: int):
    """
    Textbook binary-heap Dijkstra from `source` on existing labels.

    Uses the same path total order and relaxation primitive as the main
    solver, so it settles on identical paths and identical sums.
    """
    heap = CountingHeap(state.counters)
    heap.push(state.key(source))
    settled = set()
    while heap:
        key = heap.pop()
        u = key.endpoint
        if u in settled or key != state.key(u):
            continue
        settled.add(u)
        for v, w in graph.out_edges(u):
            if try_relax(state, u, v, w):
                heap.push(state.key(v))


def run_dijkstra(g: Graph, s: int) -> SsspState:
    g.check_vertex(s)
    state = SsspState.for_source(g.vertex_count, s)
    dijkstra_into(g, state, s)
    return state


def dijkstra(g: Graph, s: int) -> Tuple[List[float], OpCounters]:
    """
    Exact distances from s.

    Args:
        g (Graph): Non-negative weights.
        s (int): Source vertex.

    Raises:
        BadVertexId: If s is out of range.

    Returns:
        Tuple[List[float], OpCounters]: Distances (inf when unreachable) and
        the comparisons/additions spent.
    """
    state = run_dijkstra(g, s)
    return state.dhat, state.counters
