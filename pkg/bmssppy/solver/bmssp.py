from dataclasses import dataclass, field
from typing import List, Optional, Set, Tuple

from ..errors import FrontierTooLarge, NotSingleton
from ..graph import Bound, CountingHeap, Graph, PathKey, SsspState, in_range, try_relax
from ..structures import BlockSeq
from ..utils import Logger
from .instrument import Instrumentation, NodeChecker
from .params import SolverOptions, SolverParams
from .pivots import find_pivots

log = Logger(name="BMSSP")


@dataclass
class SolverContext:
    """Everything one solve shares across its recursion."""

    graph: Graph
    state: SsspState
    params: SolverParams
    options: SolverOptions = field(default_factory=SolverOptions)
    instrumentation: Instrumentation = field(default_factory=Instrumentation)
    checker: Optional[NodeChecker] = None


@dataclass
class BmsspResult:
    """
    Attributes:
        b_prime (Bound): Achieved boundary, never above the requested one.
        U (Set[int]): Vertices completed by the call.
    """

    b_prime: Bound
    U: Set[int]


def base_case(ctx: SolverContext, B: Bound, S: Set[int]) -> BmsspResult:
    """
    Bounded Dijkstra from the single frontier vertex.

    Extraction stops once k + 1 vertices are settled. With at most k
    settled the call succeeds with B; otherwise the largest settled key
    becomes the new boundary and is excluded from U.

    Args:
        ctx (SolverContext): The shared solve context.
        B (Bound): Exclusive key bound on relaxations.
        S (Set[int]): A singleton frontier {x} with x complete.

    Raises:
        NotSingleton: If |S| != 1.
    """
    if len(S) != 1:
        raise NotSingleton(len(S))
    (x,) = S
    state, graph = ctx.state, ctx.graph
    k = ctx.params.k
    settled = {x}
    extracted: Set[int] = set()
    heap = CountingHeap(state.counters)
    heap.push(state.key(x))
    relaxations = 0
    while heap and len(settled) < k + 1:
        key = heap.pop()
        u = key.endpoint
        if u in extracted or key != state.key(u):
            continue
        extracted.add(u)
        settled.add(u)
        for v, w in graph.out_edges(u):
            relaxations += 1
            if try_relax(state, u, v, w, bound=B):
                heap.push(state.key(v))
    ctx.instrumentation.relaxations += relaxations

    if len(settled) <= k:
        return BmsspResult(B, settled)
    keys = [state.key(v) for v in settled]
    b_prime = max(keys)
    return BmsspResult(b_prime, {key.endpoint for key in keys if key < b_prime})


def _relax_out_of(
    ctx: SolverContext,
    ds: BlockSeq,
    completed: Set[int],
    low: Bound,
    mid: Bound,
    high: Bound,
) -> List[Tuple[int, PathKey]]:
    """
    Relax every edge leaving `completed`. Heads landing in [mid, high) are
    inserted directly; heads in [low, mid) are returned for a batch prepend.
    """
    state, graph = ctx.state, ctx.graph
    batch: List[Tuple[int, PathKey]] = []
    for u in completed:
        for v, w in graph.out_edges(u):
            ctx.instrumentation.relaxations += 1
            if not try_relax(state, u, v, w):
                continue
            key = state.key(v)
            state.counters.comparisons += 2
            if in_range(key, mid, high):
                ds.insert(v, key)
                ctx.instrumentation.direct_inserts += 1
            elif in_range(key, low, mid):
                batch.append((v, key))
    return batch


def bmssp(ctx: SolverContext, l: int, B: Bound, S: Set[int]) -> BmsspResult:
    """
    Bounded multi-source shortest paths at recursion level l.

    Completes every vertex whose shortest path visits S and whose key is
    below the returned boundary B' <= B. The call stops early (B' < B) once
    k * 2^(l*t) vertices are complete.

    Args:
        ctx (SolverContext): The shared solve context.
        l (int): Recursion level; 0 runs the base case.
        B (Bound): Exclusive upper bound, above every key in S.
        S (Set[int]): Frontier of at most 2^(l*t) vertices.

    Raises:
        FrontierTooLarge: If |S| > 2^(l*t).

    Returns:
        BmsspResult: The boundary B' and the completed set U.
    """
    params = ctx.params
    state = ctx.state
    limit = params.frontier_limit(l)
    if len(S) > limit:
        raise FrontierTooLarge(len(S), limit, l)

    if l == 0:
        result = base_case(ctx, B, S)
        ctx.instrumentation.record(l, len(S), 0, len(result.U), B, result.b_prime)
        if ctx.checker is not None:
            ctx.checker.check_node(l, B, S, result.U, result.b_prime)
        return result

    pivots = find_pivots(ctx.graph, state, B, S, params.k)
    ctx.instrumentation.relaxations += pivots.relaxations
    if ctx.checker is not None:
        ctx.checker.check_pivots(set(S), pivots)

    ds = BlockSeq(
        M=params.frontier_limit(l - 1),
        B=B,
        counters=state.counters,
        debug_checks=ctx.options.debug_checks,
    )
    for x in pivots.pivots:
        ds.insert(x, state.key(x))
    b_prime_last = min((state.key(x) for x in pivots.pivots), default=B)

    completed: Set[int] = set()
    children: List[Set[int]] = []
    workload = params.workload_limit(l)
    while len(completed) < workload and not ds.is_empty():
        if ctx.checker is not None:
            ctx.checker.check_progress(ds.peek_min(), b_prime_last)
        frontier_i, bound_i = ds.pull()
        child = bmssp(ctx, l - 1, bound_i, frontier_i)
        children.append(child.U)
        completed |= child.U
        # Entries left behind for vertices a child completed are stale.
        for x in child.U:
            ds.discard(x)
        batch = _relax_out_of(ctx, ds, child.U, child.b_prime, bound_i, B)
        for x in frontier_i:
            key = state.key(x)
            state.counters.comparisons += 2
            if in_range(key, child.b_prime, bound_i):
                batch.append((x, key))
        ds.batch_prepend(batch)
        b_prime_last = child.b_prime

    b_prime = B if ds.is_empty() else min(b_prime_last, B)
    state.counters.comparisons += len(pivots.closure)
    completed.update(x for x in pivots.closure if state.key(x) < b_prime)

    ctx.instrumentation.record(
        l, len(S), len(pivots.pivots), len(completed), B, b_prime
    )
    if ctx.checker is not None:
        ctx.checker.check_node(
            l, B, S, completed, b_prime, children, pivots=pivots.pivots
        )
    return BmsspResult(b_prime, completed)
