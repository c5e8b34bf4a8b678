from bisect import bisect_left
from typing import Dict, Iterable, List, Optional, Set

from ..errors import InvariantViolation
from ..graph import Bound, PathKey, SsspState
from ..utils import BaseRecord, Logger
from .params import SolverParams
from .pivots import PivotResult

log = Logger(name="Instrumentation")


class TraceRecord(BaseRecord):
    """
    One recursion node: its level, the sizes of S, P and U, the bound it was
    given, the bound it achieved and whether it stopped early.
    """

    __SLOTS__ = ("l", "sizeS", "sizeP", "sizeU", "partial", "B", "B_prime")

    def __init__(
        self,
        l: int,
        sizeS: int,
        sizeP: int,
        sizeU: int,
        B: Bound,
        B_prime: Bound,
    ):
        self.l = l
        self.sizeS = sizeS
        self.sizeP = sizeP
        self.sizeU = sizeU
        self.B = B.to_json()
        self.B_prime = B_prime.to_json()
        self.partial = B_prime < B


class Instrumentation:
    """
    Counters and optional trace shared by every node of one solve.
    """

    def __init__(self, trace: bool = False):
        self.trace: Optional[List[TraceRecord]] = [] if trace else None
        self.direct_inserts = 0
        self.relaxations = 0
        self.nodes = 0

    def record(self, level: int, size_s: int, size_p: int, size_u: int, bound: Bound, b_prime: Bound):
        self.nodes += 1
        partial = b_prime < bound
        log.debug(
            f"l={level} |S|={size_s} |P|={size_p} |U|={size_u} partial={partial}"
        )
        if self.trace is not None:
            self.trace.append(
                TraceRecord(level, size_s, size_p, size_u, bound, b_prime)
            )

    def as_dict(self) -> Dict[str, int]:
        return {
            "direct_inserts": self.direct_inserts,
            "relaxations": self.relaxations,
            "nodes": self.nodes,
        }


class NodeChecker:
    """
    Verification mode: checks every recursion node against the oracle's
    final keys and shortest-path tree.
    """

    def __init__(
        self,
        state: SsspState,
        params: SolverParams,
        oracle_keys: List[Optional[PathKey]],
        oracle_pred: List[Optional[int]],
    ):
        self.state = state
        self.params = params
        self.keys = oracle_keys
        self.pred = oracle_pred
        self._ranked = sorted(key for key in oracle_keys if key is not None)

    @staticmethod
    def fail(message: str):
        log.warning(message)
        raise InvariantViolation(message)

    def check_pivots(self, frontier: Set[int], result: PivotResult):
        k = self.params.k
        if not result.pivots <= frontier:
            self.fail("pivots are not a subset of the frontier")
        if len(result.pivots) * k > len(result.closure):
            self.fail(
                f"|P|={len(result.pivots)} exceeds |W|/k with |W|={len(result.closure)}, k={k}"
            )

    def check_progress(self, live_min: Optional[PathKey], b_prime: Bound):
        if live_min is not None and live_min < b_prime:
            self.fail(f"live value {live_min} below previous boundary {b_prime}")

    def _meets(self, v: int, sources: Set[int], floor: PathKey, memo: Dict[int, bool]) -> bool:
        path: List[int] = []
        node: Optional[int] = v
        found = False
        while node is not None:
            if node in memo:
                found = memo[node]
                break
            if node in sources:
                found = True
                break
            key = self.keys[node]
            if key is None or key < floor:
                break
            path.append(node)
            node = self.pred[node]
        for visited in path:
            memo[visited] = found
        return found

    def expected_completed(self, frontier: Set[int], b_prime: Bound) -> Set[int]:
        """Vertices below b_prime whose oracle shortest path visits the frontier."""
        floors = [self.keys[x] for x in frontier if self.keys[x] is not None]
        if not floors:
            return set()
        floor = min(floors)
        start = bisect_left(self._ranked, floor)
        stop = bisect_left(self._ranked, b_prime)
        memo: Dict[int, bool] = {}
        return {
            key.endpoint
            for key in self._ranked[start:stop]
            if self._meets(key.endpoint, frontier, floor, memo)
        }

    def check_node(
        self,
        level: int,
        bound: Bound,
        frontier: Set[int],
        completed: Set[int],
        b_prime: Bound,
        children: Iterable[Set[int]] = (),
        pivots: Optional[Set[int]] = None,
    ):
        """
        Checks one returned node: U is exactly the completed set below B'
        reached through S, sizes respect the workload limits, and the
        children's sets are disjoint.
        """
        if bound < b_prime:
            self.fail(f"B'={b_prime} above B={bound} at level {level}")
        expected = self.expected_completed(frontier, b_prime)
        if completed != expected:
            missing = sorted(expected - completed)[:5]
            extra = sorted(completed - expected)[:5]
            self.fail(
                f"level {level}: U differs from oracle (missing {missing}, extra {extra})"
            )
        for v in completed:
            if self.state.key(v) != self.keys[v]:
                self.fail(
                    f"level {level}: vertex {v} incomplete ({self.state.key(v)} vs {self.keys[v]})"
                )
        limit = self.params.workload_limit(level)
        if len(completed) > 4 * limit:
            self.fail(f"level {level}: |U|={len(completed)} exceeds 4k2^(lt)={4 * limit}")
        partial = b_prime < bound
        if partial and len(completed) < limit:
            self.fail(f"level {level}: partial node with |U|={len(completed)} < k2^(lt)={limit}")
        if pivots is not None:
            k = self.params.k
            if partial:
                economical = (
                    len(pivots) <= len(frontier)
                    and len(frontier) * k <= len(completed)
                )
            else:
                economical = len(pivots) * k <= len(completed)
            if not economical:
                self.fail(f"level {level}: |P|={len(pivots)} not within |U|/k")
        seen: Set[int] = set()
        for child in children:
            if seen & child:
                self.fail(f"level {level}: child sets overlap")
            seen |= child
