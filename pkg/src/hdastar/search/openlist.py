"""Open list backends.

Both backends pop a minimum-f entry and break ties among equal f either
LIFO (most recently pushed first) or FIFO. Entries are (f, g, state)
triples; staleness is the caller's business, the open list just orders
what it was given. Given the same push sequence, the two backends pop
in exactly the same order.
"""

from __future__ import annotations

import heapq
from collections import deque

from hdastar.errors import ConfigError

LIFO = "LIFO"
FIFO = "FIFO"


class HeapOpenList:
    """Binary heap keyed on (f, +/-insertion sequence)."""

    def __init__(self, tiebreak: str = LIFO):
        if tiebreak not in (LIFO, FIFO):
            raise ConfigError(f"unknown tie-break {tiebreak!r}")
        self.tiebreak = tiebreak
        self._heap: list = []
        self._seq = 0

    def __len__(self):
        return len(self._heap)

    def push(self, f: int, g: int, state):
        self._seq += 1
        seq = -self._seq if self.tiebreak == LIFO else self._seq
        heapq.heappush(self._heap, (f, seq, g, state))

    def peek_f(self):
        return self._heap[0][0] if self._heap else None

    def pop(self):
        f, _, g, state = heapq.heappop(self._heap)
        return f, g, state


class BucketOpenList:
    """Two-level structure: an array indexed by f, a deque within.

    All operations are O(1); the minimum-f cursor only moves forward
    except when a push lands below it. Suited to the small integer
    f-values of unit-cost domains.
    """

    def __init__(self, tiebreak: str = LIFO):
        if tiebreak not in (LIFO, FIFO):
            raise ConfigError(f"unknown tie-break {tiebreak!r}")
        self.tiebreak = tiebreak
        self._buckets: list[deque | None] = []
        self._min_f = 0
        self._count = 0

    def __len__(self):
        return self._count

    def push(self, f: int, g: int, state):
        buckets = self._buckets
        if f >= len(buckets):
            buckets.extend([None] * (f + 1 - len(buckets)))
        bucket = buckets[f]
        if bucket is None:
            bucket = buckets[f] = deque()
        bucket.append((g, state))
        if self._count == 0 or f < self._min_f:
            self._min_f = f
        self._count += 1

    def peek_f(self):
        if self._count == 0:
            return None
        buckets = self._buckets
        f = self._min_f
        while not buckets[f]:
            f += 1
        self._min_f = f
        return f

    def pop(self):
        f = self.peek_f()
        bucket = self._buckets[f]
        g, state = bucket.pop() if self.tiebreak == LIFO else bucket.popleft()
        self._count -= 1
        return f, g, state


BACKENDS = {"bucket": BucketOpenList, "heap": HeapOpenList}


def make_open_list(backend: str = "bucket", tiebreak: str = LIFO):
    try:
        cls = BACKENDS[backend]
    except KeyError:
        raise ConfigError(
            f"unknown open-list backend {backend!r}; choose from {sorted(BACKENDS)}")
    return cls(tiebreak)
