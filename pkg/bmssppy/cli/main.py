import sys
from argparse import ArgumentParser
from pathlib import Path
from typing import List, Optional

from ..errors import InputError
from ..graph import Graph
from ..oracle import verify
from ..solver import SolverOptions, solve_sssp
from ..utils import Logger
from .bench import bench, scaling_spread, to_tsv
from .config import Command, DEFAULT_WEIGHT_RANGE, RunConfig
from .dimacs import parse_dimacs, parse_distances, write_dimacs, write_distances
from .generate import generate

log = Logger(name="CLI")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2

# Soft scaling limit on the normalized ratio spread across bench sizes
SCALING_SPREAD_LIMIT = 4.0


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="bmssppy",
        description="Single-source shortest paths by bounded multi-source recursion.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Solve and write distances")
    solve.add_argument("-i", "--input", required=True, help="DIMACS .gr file")
    solve.add_argument("-s", "--source", type=int, default=1, help="1-based source")
    solve.add_argument("-o", "--output", help="Distances file (stdout if omitted)")
    solve.add_argument("--trace", help="Write recursion trace as JSON lines")
    solve.add_argument("--force-bmssp", action="store_true")
    solve.add_argument("--integer-weights", action="store_true")

    check = commands.add_parser("verify", help="Check distances against Dijkstra")
    check.add_argument("-i", "--input", required=True)
    check.add_argument("-s", "--source", type=int, default=1)
    check.add_argument("-d", "--distances", help="Candidate distances file")
    check.add_argument("--force-bmssp", action="store_true")
    check.add_argument("--integer-weights", action="store_true")

    gen = commands.add_parser("gen", help="Generate a seeded graph")
    gen.add_argument("--kind", default="random")
    gen.add_argument("-n", type=int, required=True)
    gen.add_argument("-m", type=int, default=0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--weight-low", type=float, default=DEFAULT_WEIGHT_RANGE[0])
    gen.add_argument("--weight-high", type=float, default=DEFAULT_WEIGHT_RANGE[1])
    gen.add_argument("--float-weights", action="store_true")
    gen.add_argument("-o", "--output")

    bench_cmd = commands.add_parser("bench", help="Operation-count benchmark")
    bench_cmd.add_argument("--sizes", default="4096,65536,1048576")
    bench_cmd.add_argument("--trials", type=int, default=1)
    bench_cmd.add_argument("--seed", type=int, default=0)
    bench_cmd.add_argument("-o", "--output")
    return parser


def _emit(text: str, path: Optional[str]):
    if path:
        Path(path).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _load(config: RunConfig) -> Graph:
    text = Path(config.input_path).read_text()  # type: ignore
    return parse_dimacs(text, integer_weights=config.integer_weights)


def run_solve(config: RunConfig) -> int:
    graph = _load(config)
    report = solve_sssp(
        graph,
        config.source - 1,
        SolverOptions(force_bmssp=config.force_bmssp, trace=bool(config.trace_path)),
    )
    _emit(write_distances(report.distances), config.output_path)
    if config.trace_path:
        report.trace_frame().to_json(config.trace_path, orient="records", lines=True)
    return EXIT_OK


def run_verify(config: RunConfig) -> int:
    graph = _load(config)
    source = config.source - 1
    if config.distances_path:
        candidate = parse_distances(Path(config.distances_path).read_text())
        counters = None
    else:
        report = solve_sssp(graph, source, SolverOptions(force_bmssp=config.force_bmssp))
        candidate, counters = report.distances, report.counters
    result = verify(graph, source, candidate, counters)
    if not result.equal:
        vertex, expected, got = result.first_mismatch  # type: ignore
        log.error(f"Mismatch at vertex {vertex + 1}: expected {expected!r}, got {got!r}")
        return EXIT_MISMATCH
    log.info("Distances match the oracle")
    return EXIT_OK


def run_gen(config: RunConfig) -> int:
    spec = config.generator
    graph = generate(spec)  # type: ignore
    _emit(write_dimacs(graph, comment=f"{spec.kind} n={spec.n} seed={spec.seed}"), config.output_path)  # type: ignore
    return EXIT_OK


def run_bench(config: RunConfig) -> int:
    table = bench(config.sizes, config.trials, config.seed)
    _emit(to_tsv(table), config.output_path)
    for column in ("bmssp_ratio", "dijkstra_ratio"):
        spread = scaling_spread(table, column)
        if spread > SCALING_SPREAD_LIMIT:
            log.warning(f"{column} varies by {spread:.2f}x across sizes")
    return EXIT_OK


HANDLERS = {
    Command.Solve: run_solve,
    Command.Verify: run_verify,
    Command.Gen: run_gen,
    Command.Bench: run_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    CLI entry point.

    Returns:
        int: 0 on success, 1 on a verification mismatch, 2 on input errors.
    """
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig.from_args(args)
        if config.log_level is not None:
            Logger.set_global_level(config.log_level)
        return HANDLERS[config.command](config)
    except (InputError, OSError) as e:
        log.error(f"{type(e).__name__}: {e}")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
