import asyncio
import math
from typing import Dict, List, Sequence

import pandas as pd

from ..errors import BadSpec
from ..graph import Graph
from ..oracle import dijkstra
from ..solver import SolverOptions, solve_sssp
from ..utils import BaseRecord, Logger, RuntimeHelper
from .config import BENCH_DEGREE, GeneratorKind, GeneratorSpec
from .generate import generate

log = Logger(name="Bench")

timed_solve = RuntimeHelper.timed(solve_sssp)
timed_dijkstra = RuntimeHelper.timed(dijkstra)


class BenchRow(BaseRecord):
    """
    Averages over the trials of one size.
    """

    __SLOTS__ = (
        "n",
        "m",
        "trials",
        "bmssp_ops",
        "dijkstra_ops",
        "bmssp_seconds",
        "dijkstra_seconds",
        "bmssp_ratio",
        "dijkstra_ratio",
    )

    def __init__(self, n: int, m: int, cells: List[Dict[str, float]]):
        self.n = n
        self.m = m
        self.trials = len(cells)
        mean = lambda column: sum(cell[column] for cell in cells) / len(cells)  # noqa: E731
        self.bmssp_ops = mean("bmssp_ops")
        self.dijkstra_ops = mean("dijkstra_ops")
        self.bmssp_seconds = mean("bmssp_seconds")
        self.dijkstra_seconds = mean("dijkstra_seconds")
        log_n = math.log2(n) if n > 1 else 1.0
        edges = max(m, 1)
        self.bmssp_ratio = self.bmssp_ops / (edges * log_n ** (2 / 3))
        self.dijkstra_ratio = self.dijkstra_ops / (edges * log_n)


def _run_cell(graph: Graph) -> Dict[str, float]:
    """One (graph, trial) cell, timed on the calling thread."""
    report, bmssp_seconds = timed_solve(graph, 0, SolverOptions(force_bmssp=True))
    (_, counters), dijkstra_seconds = timed_dijkstra(graph, 0)
    return {
        "m": graph.edge_count,
        "bmssp_ops": report.counters.total,
        "dijkstra_ops": counters.total,
        "bmssp_seconds": bmssp_seconds,
        "dijkstra_seconds": dijkstra_seconds,
    }


async def _generate_size(n: int, trials: int, seed: int) -> List[Graph]:
    specs = [
        GeneratorSpec(
            kind=GeneratorKind.Random,
            n=n,
            m=BENCH_DEGREE * n,
            seed=seed + trial,
        )
        for trial in range(trials)
    ]
    tasks = [asyncio.create_task(asyncio.to_thread(generate, spec)) for spec in specs]
    return list(await asyncio.gather(*tasks))


def bench(sizes: Sequence[int], trials: int = 1, seed: int = 0) -> pd.DataFrame:
    """
    Count operations of the solver and of Dijkstra on random graphs with
    m = 4n, one row per size.

    Args:
        sizes (Sequence[int]): Ascending vertex counts.
        trials (int): Seeded graphs per size, generated concurrently and
            timed one after another.
        seed (int): Seed of the first trial.

    Raises:
        BadSpec: If sizes are not ascending or trials < 1.

    Returns:
        pd.DataFrame: BenchRow columns, including the normalized ratios
        ops / (m log^(2/3) n) and ops / (m log n).
    """
    sizes = list(sizes)
    if not sizes or sizes != sorted(sizes):
        raise BadSpec(f"Bench sizes must be ascending: {sizes}")
    if trials < 1:
        raise BadSpec(f"trials must be >= 1, got {trials}")
    rows = []
    for n in sizes:
        log.info(f"Benchmarking n={n} with {trials} trial(s)")
        graphs = asyncio.run(_generate_size(n, trials, seed))
        cells = [_run_cell(graph) for graph in graphs]
        rows.append(BenchRow(n, int(cells[0]["m"]), cells))
    return RuntimeHelper.to_df(rows)


def scaling_spread(table: pd.DataFrame, column: str) -> float:
    """max / min of a ratio column across sizes."""
    values = table[column]
    return float(values.max() / values.min())


def to_tsv(table: pd.DataFrame) -> str:
    return table.to_csv(sep="\t", index=False)
