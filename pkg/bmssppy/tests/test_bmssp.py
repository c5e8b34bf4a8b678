import math
from random import Random

import pytest
from hypothesis import given, settings

from bmssppy.errors import BadVertexId, FrontierTooLarge, NotSingleton
from bmssppy.graph import INFINITY, PathKey, SsspState, build_graph
from bmssppy.oracle import bellman_ford, dijkstra
from bmssppy.solver import (
    SolverContext,
    SolverOptions,
    SolverParams,
    base_case,
    bmssp,
    capped_power,
    compute_params,
    solve_sssp,
)
from bmssppy.solver.instrument import NodeChecker

from .conftest import graphs, layered_graph, random_graph

FORCED = SolverOptions(force_bmssp=True)
CHECKED = SolverOptions(force_bmssp=True, verify=True, debug_checks=True)


def _context(graph, k: int, t: int = 1, l_top: int = 1) -> SolverContext:
    return SolverContext(
        graph=graph,
        state=SsspState.for_source(graph.vertex_count, 0),
        params=SolverParams(k=k, t=t, l_top=l_top, n=graph.vertex_count),
    )


def _path(length: int):
    return build_graph(length, [(i, i + 1, 1.0) for i in range(length - 1)])


@pytest.mark.parametrize(
    "n, expected",
    [
        (512, (2, 4, 3)),
        (2, (1, 1, 1)),
        (2**27, (3, 9, 3)),
        (1, (1, 1, 1)),
    ],
)
def test_compute_params(n, expected):
    params = compute_params(n)
    assert (params.k, params.t, params.l_top) == expected


def test_capped_power_saturates():
    assert capped_power(3, 100) == 8
    assert capped_power(40, 2) == 8
    assert compute_params(512).frontier_limit(3) == 2048


def test_base_case_without_out_edges():
    ctx = _context(build_graph(1, []), k=2)
    result = base_case(ctx, INFINITY, {0})
    assert result.b_prime == INFINITY
    assert result.U == {0}


def test_base_case_stops_after_k_plus_one(star):
    ctx = _context(star, k=2)
    result = base_case(ctx, INFINITY, {0})
    assert result.b_prime == PathKey(2.0, 2, 2)
    assert result.U == {0, 1}


def test_base_case_respects_bound(star):
    ctx = _context(star, k=2)
    bound = PathKey(1.5, 0, 0)
    result = base_case(ctx, bound, {0})
    assert result.b_prime == bound
    assert result.U == {0, 1}
    assert ctx.state.dhat[2] == math.inf


def test_base_case_requires_singleton(star):
    with pytest.raises(NotSingleton):
        base_case(_context(star, k=2), INFINITY, {0, 1})


def test_bmssp_completes_short_path():
    ctx = _context(_path(2), k=1)
    result = bmssp(ctx, 1, INFINITY, {0})
    assert result.b_prime == INFINITY
    assert result.U == {0, 1}
    assert ctx.state.dhat == [0.0, 1.0]


def test_bmssp_stops_early_on_long_path():
    ctx = _context(_path(6), k=1)
    result = bmssp(ctx, 1, INFINITY, {0})
    workload = ctx.params.workload_limit(1)
    assert result.b_prime < INFINITY
    assert result.b_prime == ctx.state.key(2)
    assert result.U == {0, 1}
    assert workload <= len(result.U) <= 4 * workload


def test_bmssp_rejects_oversized_frontier(star):
    with pytest.raises(FrontierTooLarge):
        bmssp(_context(star, k=1), 0, INFINITY, {0, 1})


def test_solve_single_vertex():
    report = solve_sssp(build_graph(1, []), 0)
    assert report.distances == [0.0]
    assert report.predecessors == [None]


@pytest.mark.parametrize("options", [None, FORCED, CHECKED])
def test_solve_triangle(triangle, options):
    report = solve_sssp(triangle, 0, options)
    assert report.distances == [0.0, 1.0, 3.0]
    assert report.predecessors == [None, 0, 1]
    assert report.stats["fallback"] is (options is None)


def test_solve_unreachable_vertex():
    g = build_graph(3, [(0, 1, 2.0), (2, 0, 1.0)])
    report = solve_sssp(g, 0, FORCED)
    assert report.distances == [0.0, 2.0, math.inf]
    assert report.predecessors[2] is None


def test_solve_rejects_bad_source(triangle):
    with pytest.raises(BadVertexId):
        solve_sssp(triangle, 3)


def test_solve_trace_ends_at_root(triangle):
    report = solve_sssp(triangle, 0, SolverOptions(force_bmssp=True, trace=True))
    root = report.trace[-1]
    assert root.l == report.params.l_top
    assert root.B is None and root.B_prime is None
    assert not root.partial
    frame = report.trace_frame()
    assert list(frame.columns) == ["l", "sizeS", "sizeP", "sizeU", "partial", "B", "B_prime"]
    assert len(frame) == report.stats["nodes"]


def test_trace_is_off_by_default(triangle):
    report = solve_sssp(triangle, 0, FORCED)
    assert report.trace is None
    assert report.trace_frame().empty


@pytest.mark.parametrize("seed", range(20))
def test_matches_dijkstra_on_random_graphs(seed):
    n = 20 + 15 * seed
    g = random_graph(seed, n, 4 * n)
    report = solve_sssp(g, 0, FORCED)
    expected, _ = dijkstra(g, 0)
    assert report.distances == expected
    assert report.stats["direct_inserts"] <= report.stats["transformed_edges"]


@pytest.mark.parametrize("seed", range(6))
def test_matches_dijkstra_on_layered_graphs(seed):
    g = layered_graph(seed, 50 + 30 * seed)
    report = solve_sssp(g, 0, FORCED)
    expected, _ = dijkstra(g, 0)
    assert report.distances == expected


@pytest.mark.parametrize("seed", range(6))
def test_verification_mode_random(seed):
    g = random_graph(100 + seed, 120, 480)
    report = solve_sssp(g, 0, CHECKED)
    assert report.distances == dijkstra(g, 0)[0]


@pytest.mark.parametrize("seed", range(3))
def test_verification_mode_layered(seed):
    g = layered_graph(seed, 80)
    report = solve_sssp(g, 0, CHECKED)
    assert report.distances == dijkstra(g, 0)[0]


def test_float_weights_match_bitwise():
    g = random_graph(3, 150, 600, integer_weights=False)
    assert solve_sssp(g, 0, FORCED).distances == dijkstra(g, 0)[0]


@settings(max_examples=100)
@given(graphs(max_n=40))
def test_matches_bellman_ford(g):
    assert solve_sssp(g, 0, FORCED).distances == bellman_ford(g, 0)


@settings(max_examples=40)
@given(graphs(max_n=24, max_weight=3))
def test_predecessors_lie_on_shortest_paths(g):
    report = solve_sssp(g, 0, FORCED)
    dist = report.distances
    for v, u in enumerate(report.predecessors):
        if u is None:
            assert v == 0 or dist[v] == math.inf
            continue
        assert any(
            a == u and b == v and dist[u] + w == dist[v] for a, b, w in g.edges
        )


def test_children_complete_disjoint_sets(monkeypatch):
    overlaps = []
    check_node = NodeChecker.check_node

    def record_children(self, level, bound, frontier, completed, b_prime, children=(), pivots=None):
        children = list(children)
        union = set().union(*children)
        if sum(len(child) for child in children) != len(union):
            overlaps.append(level)
        return check_node(self, level, bound, frontier, completed, b_prime, children, pivots)

    monkeypatch.setattr(NodeChecker, "check_node", record_children)
    for seed in range(8):
        g = random_graph(200 + seed, 256, 1024)
        assert solve_sssp(g, 0, CHECKED).distances == dijkstra(g, 0)[0]
    assert overlaps == []


def _corpus_graph(seed: int):
    rng = Random(seed)
    n = rng.randint(2, 512)
    return random_graph(seed, n, rng.randint(0, 4 * n))


def _check_against_dijkstra(g, options=FORCED):
    report = solve_sssp(g, 0, options)
    assert report.distances == dijkstra(g, 0)[0]
    assert report.stats["direct_inserts"] <= report.stats["transformed_edges"]


@pytest.mark.slow
@pytest.mark.parametrize("chunk", range(20))
def test_random_corpus_matches_dijkstra(chunk):
    for seed in range(50 * chunk, 50 * (chunk + 1)):
        _check_against_dijkstra(_corpus_graph(seed))


@pytest.mark.slow
@pytest.mark.parametrize("chunk", range(4))
def test_layered_corpus_matches_dijkstra(chunk):
    for seed in range(50 * chunk, 50 * (chunk + 1)):
        _check_against_dijkstra(layered_graph(seed, 2 + Random(seed).randrange(511)))


@pytest.mark.slow
@pytest.mark.parametrize("chunk", range(10))
def test_verification_mode_corpus(chunk):
    for seed in range(20 * chunk, 20 * (chunk + 1)):
        rng = Random(10_000 + seed)
        n = rng.randint(2, 256)
        g = random_graph(10_000 + seed, n, 4 * n)
        _check_against_dijkstra(g, CHECKED)
