import math
from typing import List

from ..graph import Graph


def bellman_ford(g: Graph, s: int) -> List[float]:
    """
    Exact distances by rounds of full edge relaxation.

    Independent of the heap and of the path total order: a plain strict
    improvement test, at most n - 1 rounds, stopping after a quiet round.

    Args:
        g (Graph): Non-negative weights.
        s (int): Source vertex.

    Raises:
        BadVertexId: If s is out of range.
    """
    g.check_vertex(s)
    dist = [math.inf] * g.vertex_count
    dist[s] = 0.0
    for _ in range(max(g.vertex_count - 1, 0)):
        changed = False
        for u, v, w in g.edges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            break
    return dist
