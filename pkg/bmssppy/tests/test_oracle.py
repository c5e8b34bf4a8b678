import math

import pytest
from hypothesis import given, settings

from bmssppy.errors import BadVertexId
from bmssppy.graph import PathKey, build_graph
from bmssppy.oracle import bellman_ford, dijkstra, oracle_keys, verify
from bmssppy.solver import SolverOptions, solve_sssp

from .conftest import graphs, random_graph


def test_dijkstra_single_vertex():
    distances, counters = dijkstra(build_graph(1, []), 0)
    assert distances == [0.0]
    assert counters.total == 0


def test_dijkstra_triangle(triangle):
    distances, counters = dijkstra(triangle, 0)
    assert distances == [0.0, 1.0, 3.0]
    assert counters.additions == triangle.edge_count


def test_bellman_ford_examples(triangle):
    assert bellman_ford(build_graph(1, []), 0) == [0.0]
    path = build_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)])
    assert bellman_ford(path, 0) == [0.0, 1.0, 2.0, 3.0]
    assert bellman_ford(triangle, 0) == [0.0, 1.0, 3.0]


def test_oracles_reject_bad_source(triangle):
    with pytest.raises(BadVertexId):
        dijkstra(triangle, 5)
    with pytest.raises(BadVertexId):
        bellman_ford(triangle, -1)


@settings(max_examples=200)
@given(graphs(max_n=64))
def test_dijkstra_agrees_with_bellman_ford(g):
    assert dijkstra(g, 0)[0] == bellman_ford(g, 0)


def test_oracle_keys_mark_unreachable():
    g = build_graph(3, [(0, 1, 2.0)])
    keys, preds = oracle_keys(g, 0)
    assert keys == [PathKey(0.0, 1, 0), PathKey(2.0, 2, 1), None]
    assert preds == [None, 0, None]


def test_verify_accepts_oracle_output(triangle):
    report = verify(triangle, 0, dijkstra(triangle, 0)[0])
    assert report.equal
    assert report.first_mismatch is None
    assert "dijkstra" in report.counters


def test_verify_reports_first_mismatch(triangle):
    report = verify(triangle, 0, [0.0, 1.0, 4.0])
    assert not report.equal
    assert report.first_mismatch == (2, 3.0, 4.0)


def test_verify_flags_length_mismatch(triangle):
    report = verify(triangle, 0, [0.0, 1.0])
    assert not report.equal
    assert report.first_mismatch[0] == 2


def test_verify_carries_candidate_counters(triangle):
    solved = solve_sssp(triangle, 0, SolverOptions(force_bmssp=True))
    report = verify(triangle, 0, solved.distances, solved.counters)
    assert report.equal
    assert report.counters["candidate"].total > 0


@pytest.mark.parametrize("seed", range(25))
def test_verify_solver_output(seed):
    g = random_graph(seed, 60 + seed, 240 + 4 * seed)
    solved = solve_sssp(g, 0, SolverOptions(force_bmssp=True))
    assert verify(g, 0, solved.distances).equal


def test_dijkstra_comparisons_grow_like_sorting():
    n = 2048
    g = random_graph(11, n, 4 * n)
    source = max(range(n), key=g.out_degree)
    distances, counters = dijkstra(g, source)
    reached = sum(1 for d in distances if d != math.inf)
    assert reached > n // 2
    assert counters.comparisons >= 0.5 * reached * math.log2(reached)
