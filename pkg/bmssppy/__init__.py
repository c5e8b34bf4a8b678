from .graph import (
    Graph as Graph,
    PathKey as PathKey,
    INFINITY as INFINITY,
    build_graph as build_graph,
    to_constant_degree as to_constant_degree,
)
from .solver import (
    SolverOptions as SolverOptions,
    SolveReport as SolveReport,
    solve_sssp as solve_sssp,
)
from .oracle import (
    dijkstra as dijkstra,
    bellman_ford as bellman_ford,
    verify as verify,
)
