import math
from dataclasses import dataclass, field
from typing import List, Optional

from ..errors import BadVertexId, Unreached
from .keys import Bound, PathKey


@dataclass
class OpCounters:
    """Unit-cost operations of the comparison-addition model."""

    comparisons: int = 0
    additions: int = 0

    @property
    def total(self) -> int:
        return self.comparisons + self.additions

    def snapshot(self) -> "OpCounters":
        return OpCounters(self.comparisons, self.additions)

    def reset(self):
        self.comparisons = 0
        self.additions = 0


@dataclass
class SsspState:
    """
    Per-vertex labels of one run: the estimate d̂, the predecessor and the
    hop count of the path realizing d̂, plus the operation counters.
    """

    dhat: List[float]
    pred: List[Optional[int]]
    hops: List[int]
    counters: OpCounters = field(default_factory=OpCounters)

    @classmethod
    def for_source(cls, vertex_count: int, source: int) -> "SsspState":
        """
        Fresh labels with only the source reached.

        Args:
            vertex_count (int): Number of vertices.
            source (int): The source vertex.

        Returns:
            SsspState: dhat[source] = 0, hops[source] = 1, everything else unreached.
        """
        if not 0 <= source < vertex_count:
            raise BadVertexId(source, vertex_count)
        dhat = [math.inf] * vertex_count
        hops = [0] * vertex_count
        dhat[source] = 0.0
        hops[source] = 1
        return cls(dhat=dhat, pred=[None] * vertex_count, hops=hops)

    def key(self, v: int) -> PathKey:
        """Key of v without the reachability check (hot path)."""
        return PathKey(self.dhat[v], self.hops[v], v)


def path_key_of(state: SsspState, v: int) -> PathKey:
    """
    Returns `(dhat[v], hops[v], v)`.

    Raises:
        Unreached: If v has no finite estimate yet.
    """
    if state.dhat[v] == math.inf:
        raise Unreached(v)
    return PathKey(state.dhat[v], state.hops[v], v)


def try_relax(
    state: SsspState,
    u: int,
    v: int,
    w: float,
    bound: Optional[Bound] = None,
) -> bool:
    """
    Relax edge (u, v, w) under the path total order.

    The candidate `(dhat[u] + w, hops[u] + 1)` is accepted when it is no
    worse than v's current label; a full tie is broken on the penultimate
    vertex: accept when u is already pred[v] or has the smaller id. With a
    bound, the candidate key must also lie strictly below it.

    Args:
        state (SsspState): Labels to update.
        u (int): Tail with finite estimate.
        v (int): Head.
        w (float): Non-negative weight.
        bound (Optional[Bound]): Exclusive upper bound on the new key.

    Returns:
        bool: Whether the labels of v now describe the path through u.
    """
    counters = state.counters
    dhat = state.dhat
    candidate = dhat[u] + w
    counters.additions += 1
    counters.comparisons += 1
    current = dhat[v]
    if candidate > current:
        return False
    candidate_hops = state.hops[u] + 1
    if candidate == current:
        counters.comparisons += 1
        if candidate_hops > state.hops[v]:
            return False
        if candidate_hops == state.hops[v]:
            counters.comparisons += 1
            previous = state.pred[v]
            if previous is None or (previous != u and u > previous):
                return False
    if bound is not None:
        counters.comparisons += 1
        if not PathKey(candidate, candidate_hops, v) < bound:
            return False
    dhat[v] = candidate
    state.hops[v] = candidate_hops
    state.pred[v] = u
    return True


def reset_counters(state: SsspState):
    state.counters.reset()


def read_counters(state: SsspState) -> OpCounters:
    return state.counters.snapshot()
