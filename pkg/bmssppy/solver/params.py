import math
from dataclasses import dataclass

# Transformed graphs below this size are solved by the oracle Dijkstra
SMALL_INSTANCE_THRESHOLD = 16


@dataclass(frozen=True)
class SolverParams:
    """
    Recursion parameters derived from the (transformed) vertex count.

    Attributes:
        k (int): floor(log^(1/3) n), at least 1. Relaxation rounds and pivot tree size.
        t (int): floor(log^(2/3) n), at least 1. Level fan-out exponent.
        l_top (int): ceil(log n / t), at least 1. Top recursion level.
        n (int): The vertex count the parameters were computed for.
    """

    k: int
    t: int
    l_top: int
    n: int

    def frontier_limit(self, level: int) -> int:
        """2^(level*t), capped at 4n."""
        return capped_power(level * self.t, self.n)

    def workload_limit(self, level: int) -> int:
        """k * 2^(level*t): the size at which a call stops early."""
        return self.k * self.frontier_limit(level)


@dataclass
class SolverOptions:
    """
    Run-time switches of one solve.

    Attributes:
        force_bmssp (bool): Run the recursion even on tiny instances.
        verify (bool): Instrumented mode: check every recursion node
            against precomputed oracle keys.
        trace (bool): Record one TraceRecord per recursion node.
        debug_checks (bool): Cheap structural assertions (batch-prepend order).
        small_threshold (int): Transformed size below which the oracle runs.
    """

    force_bmssp: bool = False
    verify: bool = False
    trace: bool = False
    debug_checks: bool = False
    small_threshold: int = SMALL_INSTANCE_THRESHOLD


def capped_power(exponent: int, n: int) -> int:
    """
    2**exponent saturated at 4n; any cap >= n leaves the algorithm unchanged
    because no set it bounds can exceed n.
    """
    cap = 4 * max(n, 1)
    if exponent >= cap.bit_length():
        return cap
    return min(1 << exponent, cap)


def _floor_root(value: float, numerator: int, denominator: int) -> int:
    """Largest integer r with r**denominator <= value**numerator."""
    target = value**numerator
    r = int(target ** (1.0 / denominator))
    while (r + 1) ** denominator <= target:
        r += 1
    while r > 0 and r**denominator > target:
        r -= 1
    return r


def compute_params(n: int) -> SolverParams:
    """
    Derive k, t and the top level from n with base-2 logarithms.

    Args:
        n (int): Vertex count, at least 1.

    Returns:
        SolverParams: k = floor(log^(1/3) n), t = floor(log^(2/3) n) and
        l_top = ceil(log n / t), each clamped to at least 1.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    log_n = math.log2(n)
    k = max(1, _floor_root(log_n, 1, 3))
    t = max(1, _floor_root(log_n, 2, 3))
    l_top = max(1, math.ceil(log_n / t))
    return SolverParams(k=k, t=t, l_top=l_top, n=n)
