from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Set

from ..graph import Bound, Graph, SsspState, try_relax


@dataclass
class PivotResult:
    """
    Outcome of the bounded relaxation rounds.

    Attributes:
        pivots (Set[int]): Subset of the frontier rooting relaxation trees
            of at least k vertices (the whole frontier on early exit).
        closure (Set[int]): Every vertex reached below the bound, frontier included.
        relaxations (int): Edge relaxation attempts performed.
        early_exit (bool): Whether the closure outgrew k * |frontier|.
    """

    pivots: Set[int] = field(default_factory=set)
    closure: Set[int] = field(default_factory=set)
    relaxations: int = 0
    early_exit: bool = False


def _tree_sizes(state: SsspState, closure: Dict[int, None], roots: List[int]) -> Dict[int, int]:
    children: Dict[int, List[int]] = {}
    for v in closure:
        parent = state.pred[v]
        if parent is not None and parent in closure:
            children.setdefault(parent, []).append(v)
    sizes: Dict[int, int] = {}
    for root in roots:
        count = 0
        stack = [root]
        while stack:
            node = stack.pop()
            count += 1
            stack.extend(children.get(node, ()))
        sizes[root] = count
    return sizes


def find_pivots(
    graph: Graph,
    state: SsspState,
    bound: Bound,
    frontier: Iterable[int],
    k: int,
) -> PivotResult:
    """
    Relax k rounds outward from the frontier and pick the pivots.

    Round i relaxes every out-edge of the vertices added in round i - 1 and
    keeps a head when its relaxation is accepted with a key below the bound.
    Once the closure holds more than k * |frontier| vertices the whole
    frontier is returned as pivots. Otherwise the pivots are the frontier
    vertices whose predecessor tree inside the closure has at least k
    vertices.

    Args:
        graph (Graph): Constant-degree graph.
        state (SsspState): Labels, updated in place.
        bound (Bound): Exclusive key bound.
        frontier (Iterable[int]): The source set S.
        k (int): Number of rounds and minimum tree size.

    Returns:
        PivotResult: Pivots, closure and work counters.
    """
    sources = list(frontier)
    closure: Dict[int, None] = dict.fromkeys(sources)
    layer = sources
    limit = k * len(sources)
    relaxations = 0
    for _ in range(k):
        reached: Dict[int, None] = {}
        for u in layer:
            for v, w in graph.out_edges(u):
                relaxations += 1
                if try_relax(state, u, v, w) and state.key(v) < bound:
                    reached[v] = None
        closure.update(reached)
        layer = list(reached)
        if len(closure) > limit:
            return PivotResult(
                pivots=set(sources),
                closure=set(closure),
                relaxations=relaxations,
                early_exit=True,
            )

    roots = [
        x for x in sources
        if state.pred[x] is None or state.pred[x] not in closure
    ]
    sizes = _tree_sizes(state, closure, roots)
    pivots = {root for root, size in sizes.items() if size >= k}
    return PivotResult(
        pivots=pivots, closure=set(closure), relaxations=relaxations
    )
