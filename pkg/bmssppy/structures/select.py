"""
Deterministic linear-time selection (median of medians) over distinct,
totally ordered items, with every comparison charged to an OpCounters.
"""
from typing import List, Optional, Sequence, Tuple, TypeVar

from ..graph import OpCounters

T = TypeVar("T")

GROUP = 5


def _insertion_sort(items: Sequence[T], counters: OpCounters) -> List[T]:
    result = list(items)
    for i in range(1, len(result)):
        item = result[i]
        j = i - 1
        while j >= 0:
            counters.comparisons += 1
            if not item < result[j]:
                break
            result[j + 1] = result[j]
            j -= 1
        result[j + 1] = item
    return result


def select(items: Sequence[T], rank: int, counters: OpCounters) -> T:
    """
    Returns the item of 0-based `rank` in sorted order.

    Args:
        items (Sequence[T]): Distinct items.
        rank (int): 0 <= rank < len(items).
        counters (OpCounters): Charged one comparison per element comparison.
    """
    if not 0 <= rank < len(items):
        raise IndexError(f"rank {rank} out of range for {len(items)} items")
    pool = list(items)
    while True:
        if len(pool) <= GROUP:
            return _insertion_sort(pool, counters)[rank]
        medians = []
        for start in range(0, len(pool), GROUP):
            group = _insertion_sort(pool[start : start + GROUP], counters)
            medians.append(group[(len(group) - 1) // 2])
        pivot = select(medians, (len(medians) - 1) // 2, counters)
        lower, upper = partition(pool, pivot, counters)
        # lower holds the pivot itself
        if rank < len(lower) - 1:
            pool = [item for item in lower if item is not pivot]
        elif rank == len(lower) - 1:
            return pivot
        else:
            rank -= len(lower)
            pool = upper


def partition(
    items: Sequence[T], pivot: T, counters: OpCounters
) -> Tuple[List[T], List[T]]:
    """Split into `(items <= pivot, items > pivot)` preserving input order."""
    lower: List[T] = []
    upper: List[T] = []
    for item in items:
        counters.comparisons += 1
        if pivot < item:
            upper.append(item)
        else:
            lower.append(item)
    return lower, upper


def split_smallest(
    items: Sequence[T], count: int, counters: OpCounters
) -> Tuple[List[T], List[T]]:
    """
    Returns `(count smallest items, the rest)`, both unordered.
    """
    if count <= 0:
        return [], list(items)
    if count >= len(items):
        return list(items), []
    pivot = select(items, count - 1, counters)
    return partition(items, pivot, counters)


def split_into_runs(
    items: Sequence[T], size: int, counters: OpCounters
) -> List[List[T]]:
    """
    Cut items into groups of at most `size` by repeated median splits.

    Groups are returned in ascending order: every item of a group precedes
    every item of the next one. Items inside a group stay unordered.
    """
    if size < 1:
        raise ValueError(f"group size must be >= 1, got {size}")
    runs: List[List[T]] = []
    stack: List[List[T]] = [list(items)]
    while stack:
        chunk = stack.pop()
        if len(chunk) <= size:
            if chunk:
                runs.append(chunk)
            continue
        lower, upper = split_smallest(chunk, len(chunk) // 2, counters)
        stack.append(upper)
        stack.append(lower)
    return runs


def minimum(items: Sequence[T], counters: OpCounters) -> Optional[T]:
    best: Optional[T] = None
    for item in items:
        if best is None:
            best = item
            continue
        counters.comparisons += 1
        if item < best:
            best = item
    return best
