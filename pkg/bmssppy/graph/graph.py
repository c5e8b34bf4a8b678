from typing import Iterable, List, Sequence, Tuple

from ..errors import BadVertexId, NegativeWeight
from ..utils import Logger

log = Logger(name="Graph")

Edge = Tuple[int, int, float]

# Cycle slot direction: the slot carries an outgoing or an incoming edge
OUT, IN = 0, 1


class Graph:
    """
    Immutable directed graph with non-negative real edge weights.

    Vertex ids are the dense integers `[0, vertex_count)`. Parallel edges and
    self-loops are allowed.
    """

    __slots__ = ("vertex_count", "edges", "adjacency", "_out")

    def __init__(self, vertex_count: int, edges: Sequence[Edge]):
        """
        Builds the adjacency of an already validated edge list.

        Args:
            vertex_count (int): Number of vertices.
            edges (Sequence[Edge]): `(source, target, weight)` triples.
        """
        adjacency: List[List[int]] = [[] for _ in range(vertex_count)]
        out: List[List[Tuple[int, float]]] = [[] for _ in range(vertex_count)]
        for index, (u, v, w) in enumerate(edges):
            adjacency[u].append(index)
            out[u].append((v, w))
        self.vertex_count = vertex_count
        self.edges: Tuple[Edge, ...] = tuple(edges)
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(a) for a in adjacency
        )
        self._out: Tuple[Tuple[Tuple[int, float], ...], ...] = tuple(
            tuple(o) for o in out
        )

    def __repr__(self):
        return f"Graph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def out_edges(self, u: int) -> Tuple[Tuple[int, float], ...]:
        """`(target, weight)` pairs of the edges leaving `u`."""
        return self._out[u]

    def out_degree(self, u: int) -> int:
        return len(self._out[u])

    def in_degrees(self) -> List[int]:
        degrees = [0] * self.vertex_count
        for _, v, _ in self.edges:
            degrees[v] += 1
        return degrees

    def check_vertex(self, v: int):
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise BadVertexId(v, self.vertex_count)


class TransformedGraph:
    """
    Constant-degree image of a graph together with the vertex maps.

    Attributes:
        graph (Graph): Every vertex has in-degree and out-degree at most 2.
        representative (List[int]): Original vertex id to its first cycle node.
        origin (List[int]): Transformed vertex id to the original vertex.
    """

    __slots__ = ("graph", "representative", "origin")

    def __init__(self, graph: Graph, representative: List[int], origin: List[int]):
        self.graph = graph
        self.representative = representative
        self.origin = origin

    def __repr__(self):
        return (
            f"TransformedGraph(original={self.original_vertex_count}, "
            f"vertices={self.graph.vertex_count}, edges={self.graph.edge_count})"
        )

    @property
    def original_vertex_count(self) -> int:
        return len(self.representative)


def build_graph(n: int, edge_list: Iterable[Sequence[float]]) -> Graph:
    """
    Validate an edge list and build a Graph.

    Args:
        n (int): Number of vertices.
        edge_list (Iterable): `(u, v, w)` triples with `0 <= u, v < n`.

    Raises:
        BadVertexId: If an endpoint is out of range.
        NegativeWeight: If a weight is negative (or NaN).

    Returns:
        Graph: The validated graph.
    """
    if n < 0:
        raise BadVertexId(n, 0)
    edges: List[Edge] = []
    for u, v, w in edge_list:
        for vertex in (u, v):
            if not isinstance(vertex, int) or not 0 <= vertex < n:
                raise BadVertexId(vertex, n)
        weight = float(w)
        if not weight >= 0:
            raise NegativeWeight(u, v, weight)
        edges.append((u, v, weight))
    return Graph(n, edges)


def to_constant_degree(g: Graph) -> TransformedGraph:
    """
    Replace every vertex by a zero-weight cycle with one node per incident edge.

    A vertex with d incident edges (in plus out, with multiplicity) becomes d
    nodes ordered by (neighbor id, direction, edge index) and joined into a
    directed cycle; d <= 1 yields a single node without cycle edges. Each
    original edge (u, v) links u's slot for it to v's slot for it with the
    original weight, so every node ends with in- and out-degree at most 2.

    Args:
        g (Graph): The input graph.

    Returns:
        TransformedGraph: The transformed graph and its vertex maps.
    """
    slots: List[List[Tuple[int, int, int]]] = [[] for _ in range(g.vertex_count)]
    for index, (u, v, _) in enumerate(g.edges):
        slots[u].append((v, OUT, index))
        slots[v].append((u, IN, index))

    representative: List[int] = []
    origin: List[int] = []
    out_node = [0] * g.edge_count
    in_node = [0] * g.edge_count
    edges: List[Edge] = []

    for vertex, incident in enumerate(slots):
        first = len(origin)
        representative.append(first)
        if not incident:
            origin.append(vertex)
            continue
        incident.sort()
        for offset, (_, direction, index) in enumerate(incident):
            node = first + offset
            origin.append(vertex)
            if direction == OUT:
                out_node[index] = node
            else:
                in_node[index] = node
        size = len(incident)
        if size >= 2:
            for offset in range(size):
                edges.append((first + offset, first + (offset + 1) % size, 0.0))

    for index, (_, _, w) in enumerate(g.edges):
        edges.append((out_node[index], in_node[index], w))

    transformed = Graph(len(origin), edges)
    log.debug(
        f"Transformed {g.vertex_count} vertices / {g.edge_count} edges into "
        f"{transformed.vertex_count} vertices / {transformed.edge_count} edges"
    )
    return TransformedGraph(transformed, representative, origin)
