import heapq
from typing import List

from .keys import PathKey
from .state import OpCounters


class _Entry:
    """Heap entry whose ordering charges one comparison per call."""

    __slots__ = ("key", "counters")

    def __init__(self, key: PathKey, counters: OpCounters):
        self.key = key
        self.counters = counters

    def __lt__(self, other: "_Entry") -> bool:
        self.counters.comparisons += 1
        return self.key < other.key


class CountingHeap:
    """
    Binary min-heap of PathKeys with lazy deletion.

    Decrease-key is a fresh push; callers skip popped keys that no longer
    match the vertex's current key.
    """

    def __init__(self, counters: OpCounters):
        self.counters = counters
        self._heap: List[_Entry] = []

    def __len__(self):
        return len(self._heap)

    def __bool__(self):
        return bool(self._heap)

    def push(self, key: PathKey):
        heapq.heappush(self._heap, _Entry(key, self.counters))

    def pop(self) -> PathKey:
        return heapq.heappop(self._heap).key
