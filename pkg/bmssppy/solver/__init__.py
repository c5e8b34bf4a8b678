from .params import (
    SolverParams as SolverParams,
    SolverOptions as SolverOptions,
    SMALL_INSTANCE_THRESHOLD as SMALL_INSTANCE_THRESHOLD,
    compute_params as compute_params,
    capped_power as capped_power,
)
from .pivots import PivotResult as PivotResult, find_pivots as find_pivots
from .instrument import (
    Instrumentation as Instrumentation,
    NodeChecker as NodeChecker,
    TraceRecord as TraceRecord,
)
from .bmssp import (
    BmsspResult as BmsspResult,
    SolverContext as SolverContext,
    base_case as base_case,
    bmssp as bmssp,
)
from .solve import SolveReport as SolveReport, solve_sssp as solve_sssp
