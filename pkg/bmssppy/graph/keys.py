import math
import sys
from enum import Enum
from typing import TYPE_CHECKING, NamedTuple, Optional, Union

if TYPE_CHECKING:
    from .state import OpCounters


class PathKey(NamedTuple):
    """
    Rank of a path: (length, hop count, endpoint).

    Tuple comparison is lexicographic, which realizes the total order on
    paths: two keys of distinct endpoints are never equal.
    """

    length: float
    hops: int
    endpoint: int

    @property
    def is_infinite(self) -> bool:
        return self.length == math.inf and self.hops == sys.maxsize

    def __repr__(self):
        if self.is_infinite:
            return "PathKey(inf)"
        return f"PathKey({self.length!r}, {self.hops}, {self.endpoint})"

    def to_json(self) -> Optional[list]:
        """JSON-friendly form; None stands for the infinite bound."""
        if self.is_infinite:
            return None
        return [self.length, self.hops, self.endpoint]


# The distinguished top bound: strictly above every reachable key.
INFINITY = PathKey(math.inf, sys.maxsize, sys.maxsize)

# Bounds are PathKeys; INFINITY is the only non-finite one.
Bound = PathKey


class Ordering(Enum):
    """
    Outcome of a key comparison.
    """

    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self):
        return self.name.lower()


def compare_keys(
    a: PathKey, b: PathKey, counters: Optional["OpCounters"] = None
) -> Ordering:
    """
    Compare two path keys: length first, then hop count, then endpoint id.

    Args:
        a (PathKey): Left key.
        b (PathKey): Right key.
        counters (Optional[OpCounters]): Charged one comparison for the
            length comparison.

    Returns:
        Ordering: LESS, EQUAL or GREATER.
    """
    if counters is not None:
        counters.comparisons += 1
    if a < b:
        return Ordering.LESS
    if a == b:
        return Ordering.EQUAL
    return Ordering.GREATER


def in_range(key: PathKey, low: Union[PathKey, Bound], high: Bound) -> bool:
    """Half-open interval test `low <= key < high`."""
    return low <= key < high
