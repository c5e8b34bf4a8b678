from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from math import ceil
from typing import Deque, Dict, Iterable, List, Optional, Set, Tuple

from ..errors import BadCapacity, OrderViolation, ValueAboveBound
from ..graph import Bound, OpCounters, PathKey
from ..utils import Logger
from .select import minimum, partition, select, split_into_runs, split_smallest

log = Logger(name="BlockSeq")

# Upper bound on |D1 blocks| / max(1, inserts / M) checked by the tests
D1_BLOCK_FACTOR = 8

# Ties between equal values are broken on the key so blocks split cleanly.
Entry = Tuple[PathKey, int]


class Block:
    """
    A bounded bag of key/value pairs. D1 blocks carry an inclusive upper
    bound on their entries; D0 blocks carry none.
    """

    __slots__ = ("items", "upper")

    def __init__(self, items: Dict[int, PathKey], upper: Optional[Entry] = None):
        self.items = items
        self.upper = upper

    def __repr__(self):
        return f"Block(size={len(self.items)}, upper={self.upper})"

    def entries(self) -> List[Entry]:
        return [(value, key) for key, value in self.items.items()]


@dataclass
class BlockSeqStats:
    """Instrumentation backing the amortized-cost checks."""

    inserts: int = 0
    batch_prepended: int = 0
    index_searches: int = 0
    index_search_steps: int = 0
    split_work: int = 0
    max_d1_blocks: int = 1


class BlockSeq:
    """
    Partial-sorting structure answering "the M smallest values and a bound
    separating them from the rest".

    Inserted pairs live in D1, a sequence of blocks indexed by their upper
    bounds; batch-prepended pairs live in D0, whose head always holds the
    smallest values. Blocks are value-ordered across each sequence, entries
    inside a block are not. Each key has at most one live value, the
    smallest one supplied.
    """

    def __init__(
        self,
        M: int,
        B: Bound,
        counters: Optional[OpCounters] = None,
        debug_checks: bool = False,
    ):
        """
        Initialize an empty structure.

        Args:
            M (int): Block capacity and pull size, at least 1.
            B (Bound): Exclusive upper bound on every stored value.
            counters (Optional[OpCounters]): Charged for value comparisons.
            debug_checks (bool): Verify the batch-prepend ordering precondition.

        Raises:
            BadCapacity: If M < 1.
        """
        if M < 1:
            raise BadCapacity(M)
        self.M = M
        self.B = B
        self.counters = counters if counters is not None else OpCounters()
        self.debug_checks = debug_checks
        self.stats = BlockSeqStats()
        self.d0: Deque[Block] = deque()
        # The tail block bounded by B is never removed.
        tail = Block({}, upper=(B, -1))
        self.d1: List[Block] = [tail]
        self._uppers: List[Entry] = [tail.upper]  # type: ignore
        self._where: Dict[int, Tuple[Block, PathKey]] = {}

    def __len__(self):
        return len(self._where)

    def __repr__(self):
        return (
            f"BlockSeq(M={self.M}, B={self.B}, live={len(self)}, "
            f"d0_blocks={len(self.d0)}, d1_blocks={len(self.d1)})"
        )

    def is_empty(self) -> bool:
        return not self._where

    def value_of(self, key: int) -> Optional[PathKey]:
        record = self._where.get(key)
        return record[1] if record else None

    def _delete(self, key: int):
        block, _ = self._where.pop(key)
        del block.items[key]
        if not block.items and block.upper is not None and block is not self.d1[-1]:
            index = bisect_left(self._uppers, block.upper)
            del self._uppers[index]
            del self.d1[index]

    def discard(self, key: int) -> bool:
        """Remove the live entry of key, if any; report whether one existed."""
        if key not in self._where:
            return False
        self._delete(key)
        return True

    def _supersedes(self, key: int, value: PathKey) -> bool:
        """Drop the live entry of key if value beats it; report whether it did."""
        record = self._where.get(key)
        if record is None:
            return True
        self.counters.comparisons += 1
        if not value < record[1]:
            return False
        self._delete(key)
        return True

    def insert(self, key: int, value: PathKey):
        """
        Insert a key/value pair into D1, keeping only the smaller value per key.

        Args:
            key (int): Vertex id.
            value (PathKey): Value strictly below B.

        Raises:
            ValueAboveBound: If value >= B.
        """
        self.counters.comparisons += 1
        if not value < self.B:
            raise ValueAboveBound(key, value, self.B)
        if not self._supersedes(key, value):
            return
        self.stats.inserts += 1
        entry = (value, key)
        index = bisect_left(self._uppers, entry)
        steps = len(self._uppers).bit_length()
        self.stats.index_searches += 1
        self.stats.index_search_steps += steps
        self.counters.comparisons += steps
        block = self.d1[index]
        block.items[key] = value
        self._where[key] = (block, value)
        if len(block.items) > self.M:
            self._split(index)

    def _split(self, index: int):
        block = self.d1[index]
        entries = block.entries()
        self.stats.split_work += len(entries)
        pivot = select(entries, len(entries) // 2 - 1, self.counters)
        lower, upper = partition(entries, pivot, self.counters)
        head = Block({key: value for value, key in lower}, upper=pivot)
        block.items = {key: value for value, key in upper}
        for value, key in lower:
            self._where[key] = (head, value)
        self.d1.insert(index, head)
        self._uppers.insert(index, pivot)
        self.stats.max_d1_blocks = max(self.stats.max_d1_blocks, len(self.d1))

    def batch_prepend(self, pairs: Iterable[Tuple[int, PathKey]]):
        """
        Add pairs whose values are all smaller than every live value.

        Duplicate keys keep their smallest value. Up to M pairs form one new
        head block of D0; more are cut by median splits into ordered head
        blocks of at most ceil(M/2) pairs.

        Args:
            pairs (Iterable[Tuple[int, PathKey]]): Key/value pairs.

        Raises:
            ValueAboveBound: If a value is not below B.
            OrderViolation: With debug checks on, if a value is not below
                every live value.
        """
        best: Dict[int, PathKey] = {}
        for key, value in pairs:
            current = best.get(key)
            if current is not None:
                self.counters.comparisons += 1
                if not value < current:
                    continue
            best[key] = value
        if not best:
            return
        if self.debug_checks:
            floor = self.peek_min()
            ceiling = max(best.values())
            if floor is not None and not ceiling < floor:
                raise OrderViolation(
                    f"Batch value {ceiling} is not below live minimum {floor}"
                )
        for key, value in best.items():
            self.counters.comparisons += 1
            if not value < self.B:
                raise ValueAboveBound(key, value, self.B)
        entries: List[Entry] = []
        for key, value in best.items():
            if self._supersedes(key, value):
                entries.append((value, key))
        self.stats.batch_prepended += len(entries)
        if len(entries) <= self.M:
            runs = [entries]
        else:
            runs = split_into_runs(entries, ceil(self.M / 2), self.counters)
        for run in reversed(runs):
            block = Block({key: value for value, key in run})
            for value, key in run:
                self._where[key] = (block, value)
            self.d0.appendleft(block)

    def _collect(self, blocks: Iterable[Block]) -> List[Entry]:
        collected: List[Entry] = []
        for block in blocks:
            if len(collected) >= self.M:
                break
            collected.extend(block.entries())
        return collected

    def _trim_d0(self):
        while self.d0 and not self.d0[0].items:
            self.d0.popleft()

    def peek_min(self) -> Optional[PathKey]:
        """Smallest live value, or None when empty."""
        self._trim_d0()
        heads = []
        if self.d0:
            heads.append(minimum(self.d0[0].entries(), self.counters))
        for block in self.d1:
            if block.items:
                heads.append(minimum(block.entries(), self.counters))
                break
        best = minimum(heads, self.counters)
        return best[0] if best is not None else None

    def pull(self) -> Tuple[Set[int], Bound]:
        """
        Remove up to M keys holding the smallest values.

        Returns:
            Tuple[Set[int], Bound]: The keys and a bound x with
            max(pulled) < x <= min(remaining); x = B once the structure is empty.
        """
        self._trim_d0()
        candidates = self._collect(self.d0) + self._collect(self.d1)
        if len(candidates) <= self.M:
            chosen = candidates
        else:
            chosen, _ = split_smallest(candidates, self.M, self.counters)
        keys = {key for _, key in chosen}
        for key in keys:
            self._delete(key)
        if self.is_empty():
            self.d0.clear()
            return keys, self.B
        bound = self.peek_min()
        return keys, bound  # type: ignore
