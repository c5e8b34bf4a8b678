import importlib
import logging
import math
import threading

import pandas as pd
import pytest
from hypothesis import given

from bmssppy.cli import (
    Command,
    GeneratorKind,
    GeneratorSpec,
    RunConfig,
    SplitMix64,
    bench,
    generate,
    parse_dimacs,
    parse_distances,
    scaling_spread,
    write_dimacs,
    write_distances,
)
from bmssppy.cli.main import EXIT_INPUT_ERROR, EXIT_MISMATCH, EXIT_OK, main
from bmssppy.errors import BadSpec, CountMismatch, FractionalWeight, ParseError
from bmssppy.graph import build_graph
from bmssppy.oracle import bellman_ford
from bmssppy.solver import solve_sssp
from bmssppy.utils import Logger

from .conftest import graphs

bench_module = importlib.import_module("bmssppy.cli.bench")


def test_parse_single_arc():
    g = parse_dimacs("p sp 2 1\na 1 2 5")
    assert g.vertex_count == 2
    assert g.edges == ((0, 1, 5.0),)


def test_parse_single_vertex():
    g = parse_dimacs("p sp 1 0")
    assert (g.vertex_count, g.edge_count) == (1, 0)


def test_parse_skips_comments_and_blank_lines():
    g = parse_dimacs("c generated\n\np sp 3 2\nc arcs\na 1 2 0.5\na 2 3 1e3\n")
    assert g.edges == ((0, 1, 0.5), (1, 2, 1000.0))


def test_parse_count_mismatch():
    with pytest.raises(CountMismatch):
        parse_dimacs("p sp 2 2\na 1 2 5")


@pytest.mark.parametrize(
    "text, line_no",
    [
        ("a 1 2 5\np sp 2 1", 1),
        ("p sp 2 1\na 1 3 5", 2),
        ("p sp 2 1\na 1 2 -5", 2),
        ("p sp 2 1\na 1 2 x", 2),
        ("p sp 2 1\nq 1 2 5", 2),
        ("p sp 2\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line_no):
    with pytest.raises(ParseError) as error:
        parse_dimacs(text)
    assert error.value.line_no == line_no


def test_parse_requires_problem_line():
    with pytest.raises(ParseError):
        parse_dimacs("c nothing here\n")


def test_integer_mode_rejects_fractions():
    with pytest.raises(FractionalWeight):
        parse_dimacs("p sp 2 1\na 1 2 2.5", integer_weights=True)
    assert parse_dimacs("p sp 2 1\na 1 2 2.0", integer_weights=True).edges[0][2] == 2.0


def test_write_distances_examples(triangle):
    assert write_distances([0.0]) == "1 0"
    assert write_distances([0.0, math.inf]) == "1 0\n2 inf"
    assert write_distances(solve_sssp(triangle, 0).distances) == "1 0\n2 1\n3 3"


def test_distances_round_trip_exactly():
    values = [0.0, 0.1 + 0.2, 1e-300, math.inf, 2.0**60]
    assert parse_distances(write_distances(values)) == values


def test_parse_distances_rejects_out_of_order():
    with pytest.raises(ParseError):
        parse_distances("1 0\n3 4")


@given(graphs(max_n=30))
def test_dimacs_round_trip(g):
    assert parse_dimacs(write_dimacs(g, comment="round trip")) == g


def test_fractional_weights_survive_round_trip():
    g = build_graph(2, [(0, 1, 0.1), (1, 0, 1 / 3)])
    assert parse_dimacs(write_dimacs(g)) == g


def test_splitmix_reference_output():
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_generate_path():
    g = generate(GeneratorSpec(kind=GeneratorKind.Path, n=4))
    assert g.edges == ((0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0))


def test_generate_grid_is_four_neighbor():
    g = generate(GeneratorSpec(kind=GeneratorKind.Grid, n=9, seed=1))
    assert g.edge_count == 24
    assert all(abs(u - v) in (1, 3) for u, v, _ in g.edges)


def test_generate_random_is_deterministic():
    spec = GeneratorSpec(kind=GeneratorKind.Random, n=100, m=300, seed=7)
    first, second = generate(spec), generate(spec)
    assert first == second
    assert first.edge_count == 300
    assert write_dimacs(first) == write_dimacs(second)
    assert generate(GeneratorSpec(kind=GeneratorKind.Random, n=100, m=300, seed=8)) != first


def test_generate_random_respects_weight_range():
    spec = GeneratorSpec(kind=GeneratorKind.Random, n=50, m=500, weight_low=3, weight_high=5)
    assert {w for _, _, w in generate(spec).edges} <= {3.0, 4.0, 5.0}


def test_layered_graph_has_equal_length_routes():
    g = generate(GeneratorSpec(kind=GeneratorKind.Layered, n=64, seed=2))
    dist = bellman_ford(g, 0)
    tight = [0] * g.vertex_count
    for u, v, w in g.edges:
        if dist[u] + w == dist[v]:
            tight[v] += 1
    assert max(tight) >= 2


@pytest.mark.parametrize(
    "spec",
    [
        GeneratorSpec(kind=GeneratorKind.Random, n=0),
        GeneratorSpec(kind=GeneratorKind.Random, n=5, m=-1),
        GeneratorSpec(kind=GeneratorKind.Random, n=5, weight_low=4, weight_high=2),
        GeneratorSpec(kind=GeneratorKind.Random, n=5, weight_low=0.5, weight_high=2),
    ],
)
def test_generate_rejects_bad_specs(spec):
    with pytest.raises(BadSpec):
        generate(spec)


def test_enums_parse_from_strings():
    assert Command.from_str("generate") is Command.Gen
    assert GeneratorKind.from_str("LAYERED") is GeneratorKind.Layered
    with pytest.raises(BadSpec):
        GeneratorKind.from_str("torus")


def test_bench_shape():
    table = bench([64], trials=2, seed=5)
    assert isinstance(table, pd.DataFrame)
    assert len(table) == 1
    row = table.iloc[0]
    assert row["n"] == 64 and row["trials"] == 2
    assert row["bmssp_ops"] > 0 and row["dijkstra_ops"] > 0
    assert row["bmssp_ratio"] > 0 and row["dijkstra_ratio"] > 0


@pytest.mark.parametrize("sizes, trials", [([128, 64], 1), ([], 1), ([64], 0)])
def test_bench_rejects_bad_arguments(sizes, trials):
    with pytest.raises(BadSpec):
        bench(sizes, trials=trials)


def test_scaling_spread():
    table = pd.DataFrame({"ratio": [2.0, 4.0, 3.0]})
    assert scaling_spread(table, "ratio") == 2.0


@pytest.mark.slow
def test_normalized_counts_scale():
    table = bench([2**12, 2**14, 2**16, 2**18, 2**20])
    assert scaling_spread(table, "bmssp_ratio") <= 4.0
    assert scaling_spread(table, "dijkstra_ratio") <= 4.0


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "graph.gr"
    code = main(
        ["gen", "--kind", "random", "-n", "60", "-m", "240", "--seed", "3", "-o", str(path)]
    )
    assert code == EXIT_OK
    return path


@pytest.mark.parametrize("seed", range(20))
def test_cli_round_trip(tmp_path, seed):
    graph = tmp_path / "graph.gr"
    distances = tmp_path / "dist.txt"
    assert main(["gen", "-n", str(30 + seed), "-m", str(120 + 4 * seed), "--seed", str(seed), "-o", str(graph)]) == EXIT_OK
    assert main(["solve", "-i", str(graph), "-o", str(distances), "--force-bmssp", "--integer-weights"]) == EXIT_OK
    assert main(["verify", "-i", str(graph), "-d", str(distances)]) == EXIT_OK


def test_cli_detects_corrupted_distances(graph_file, tmp_path):
    distances = tmp_path / "dist.txt"
    assert main(["solve", "-i", str(graph_file), "-o", str(distances)]) == EXIT_OK
    lines = distances.read_text().splitlines()
    lines[0] = "1 7"
    distances.write_text("\n".join(lines) + "\n")
    assert main(["verify", "-i", str(graph_file), "-d", str(distances)]) == EXIT_MISMATCH


def test_cli_verify_runs_solver(graph_file):
    assert main(["verify", "-i", str(graph_file), "--force-bmssp"]) == EXIT_OK


def test_cli_solve_to_stdout(graph_file, capsys):
    assert main(["solve", "-i", str(graph_file), "-s", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 60
    assert lines[1] == "2 0"


def test_cli_writes_trace(graph_file, tmp_path):
    trace = tmp_path / "trace.jsonl"
    out = tmp_path / "dist.txt"
    code = main(["solve", "-i", str(graph_file), "-o", str(out), "--force-bmssp", "--trace", str(trace)])
    assert code == EXIT_OK
    frame = pd.read_json(trace, lines=True)
    assert len(frame) > 0
    assert {"l", "sizeS", "sizeU", "partial"} <= set(frame.columns)


@pytest.mark.parametrize(
    "contents",
    ["p sp 2 2\na 1 2 5\n", "p sp 2 1\na 1 2 -1\n", "garbage\n"],
)
def test_cli_input_errors(tmp_path, contents):
    graph = tmp_path / "bad.gr"
    graph.write_text(contents)
    assert main(["solve", "-i", str(graph)]) == EXIT_INPUT_ERROR


def test_cli_missing_file(tmp_path):
    assert main(["solve", "-i", str(tmp_path / "absent.gr")]) == EXIT_INPUT_ERROR


def test_cli_rejects_zero_source(graph_file):
    assert main(["solve", "-i", str(graph_file), "-s", "0"]) == EXIT_INPUT_ERROR


def test_cli_rejects_fractional_weights(tmp_path):
    graph = tmp_path / "frac.gr"
    graph.write_text("p sp 2 1\na 1 2 0.5\n")
    assert main(["solve", "-i", str(graph), "--integer-weights"]) == EXIT_INPUT_ERROR


def test_cli_bench_writes_table(tmp_path):
    out = tmp_path / "bench.tsv"
    assert main(["bench", "--sizes", "32,64", "-o", str(out)]) == EXIT_OK
    table = pd.read_csv(out, sep="\t")
    assert list(table["n"]) == [32, 64]


def test_bench_times_cells_on_the_calling_thread(monkeypatch):
    caller = threading.get_ident()
    threads = []
    run_cell = bench_module._run_cell

    def record_thread(graph):
        threads.append(threading.get_ident())
        return run_cell(graph)

    monkeypatch.setattr(bench_module, "_run_cell", record_thread)
    table = bench([48], trials=3, seed=1)
    assert threads == [caller] * 3
    assert table.iloc[0]["trials"] == 3


@pytest.mark.parametrize("verbose, level", [(0, None), (1, logging.INFO), (2, logging.DEBUG)])
def test_verbosity_flows_through_run_config(graph_file, monkeypatch, verbose, level):
    flags = ["-v"] * verbose
    levels = []
    monkeypatch.setattr(Logger, "set_global_level", staticmethod(levels.append))
    assert main(flags + ["solve", "-i", str(graph_file)]) == EXIT_OK
    assert levels == ([] if level is None else [level])
    assert RunConfig(command=Command.Solve, verbose=verbose).log_level == level
